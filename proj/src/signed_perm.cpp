#include <radixcode/signed_perm.hpp>

#include <cstdlib>
#include <utility>

#include <radixcode/numeric.hpp>

namespace radixcode {

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) {
    throw NotASignedPermutation("rank must be at least 1");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i) - 1] = i;
  }
  return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) {
    throw NotASignedPermutation("window must be nonempty");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n) {
      throw NotASignedPermutation("image " + std::to_string(v) +
                                  " outside +-1..+-" + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(a)]) {
      throw NotASignedPermutation("absolute value " + std::to_string(a) +
                                  " appears twice");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
  return SignedPermutation(std::move(images));
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.size() != tau.size()) {
    throw DimensionMismatch("composing elements of different ranks");
  }
  std::vector<int> images(static_cast<std::size_t>(tau.size()));
  for (int i = 1; i <= tau.size(); ++i) {
    int t = tau.image(i);
    images[static_cast<std::size_t>(i) - 1] =
        t > 0 ? sigma.image(t) : -sigma.image(-t);
  }
  return SignedPermutation::from_images(std::move(images));
}

SignedPermutation inverse(const SignedPermutation& pi) {
  std::vector<int> images(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    int v = pi.image(i);
    images[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation::from_images(std::move(images));
}

Root Root::single(int sign, int i) {
  if (i < 1 || (sign != 1 && sign != -1)) {
    throw IndexOutOfRange("bad single root");
  }
  Root r;
  r.kind = Kind::Single;
  r.sign = sign;
  r.i = i;
  r.j = 0;
  return r;
}

Root Root::sum(int sign, int i, int j) {
  if (i < 1 || j < 1 || i == j || (sign != 1 && sign != -1)) {
    throw IndexOutOfRange("bad pair root");
  }
  Root r;
  r.kind = Kind::Sum;
  r.sign = sign;
  r.i = i < j ? i : j;
  r.j = i < j ? j : i;
  return r;
}

Root Root::diff(int sign, int i, int j) {
  if (i < 1 || j < 1 || i == j || (sign != 1 && sign != -1)) {
    throw IndexOutOfRange("bad pair root");
  }
  Root r;
  r.kind = Kind::Diff;
  if (i < j) {
    r.sign = sign;
    r.i = i;
    r.j = j;
  } else {
    // s*(e_i - e_j) with i > j is -s*(e_j - e_i)
    r.sign = -sign;
    r.i = j;
    r.j = i;
  }
  return r;
}

Root Root::negated() const {
  Root r = *this;
  r.sign = -r.sign;
  return r;
}

std::string to_string(const Root& root) {
  std::string out = root.sign < 0 ? "-" : "";
  switch (root.kind) {
    case Root::Kind::Single:
      return out + "e" + std::to_string(root.i);
    case Root::Kind::Sum:
      return out + "(e" + std::to_string(root.i) + "+e" + std::to_string(root.j) + ")";
    case Root::Kind::Diff:
      return out + "(e" + std::to_string(root.i) + "-e" + std::to_string(root.j) + ")";
  }
  return out;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    roots.push_back(Root::single(1, k));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      roots.push_back(Root::sum(1, i, j));
      roots.push_back(Root::diff(1, i, j));
    }
  }
  return roots;
}

std::vector<Root> positive_roots_at(int n, int i) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange("root slice index out of range");
  }
  std::vector<Root> roots;
  roots.reserve(2 * static_cast<std::size_t>(n - i) + 1);
  roots.push_back(Root::single(1, i));
  for (int j = i + 1; j <= n; ++j) {
    roots.push_back(Root::sum(1, i, j));
    roots.push_back(Root::diff(1, i, j));
  }
  return roots;
}

Root act_on_root(const SignedPermutation& pi, const Root& root) {
  if (root.max_index() > pi.size()) {
    throw IndexOutOfRange("root uses a coordinate beyond the permutation's rank");
  }
  auto image = [&pi](int index) {
    int v = pi.image(index);
    return std::pair<int, int>(v > 0 ? 1 : -1, std::abs(v));
  };
  if (root.kind == Root::Kind::Single) {
    auto [s, a] = image(root.i);
    return Root::single(root.sign * s, a);
  }
  auto [si, a] = image(root.i);
  auto [sj, b] = image(root.j);
  int ca = root.sign * si;
  int cb = root.sign * sj * (root.kind == Root::Kind::Sum ? 1 : -1);
  // Now the image is ca*e_a + cb*e_b with a != b.
  if (ca == cb) {
    return Root::sum(ca, a, b);
  }
  return Root::diff(ca, a, b);
}

SignedPermutation parse_window(std::string_view text) {
  std::string_view body = text;
  std::size_t base = 0;
  if (!body.empty() && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
    base = 1;
  }
  if (body.empty()) {
    throw SyntaxError("expected a window of signed integers", base);
  }
  std::vector<int> images;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view item =
        body.substr(start, comma == std::string_view::npos ? comma : comma - start);
    // tolerate surrounding spaces
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      throw SyntaxError("empty window entry", base + start);
    }
    Integer value = parse_integer(item);
    if (!value.fits_sint_p()) {
      throw NotASignedPermutation("window entry out of range");
    }
    images.push_back(static_cast<int>(value.get_si()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SignedPermutation::from_images(std::move(images));
}

std::string format_window(const SignedPermutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(pi.image(i));
  }
  return out;
}

}  // namespace radixcode
