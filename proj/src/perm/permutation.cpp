#include "nilprob/permutation.hpp"

#include <sstream>

#include "nilprob/errors.hpp"
#include "nilprob/simd/kernels.hpp"

namespace nilprob {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t p : image_) {
    if (p >= image_.size() || seen[p])
      throw DefinitionError("permutation image is not a bijection on 0.." +
                            std::to_string(image_.size()) + "-1");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::uint32_t i = 0; i < degree; ++i) image[i] = i;
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::from_cycles(
    std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> image(degree);
    for (std::uint32_t i = 0; i < degree; ++i) image[i] = i;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (cycle[j] >= degree) throw DefinitionError("cycle point out of range");
      image[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    result = compose(result, Permutation(std::move(image)));
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::optional<std::uint32_t> Permutation::first_moved_point() const noexcept {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return i;
  return std::nullopt;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> done(image_.size(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (done[i] || image_[i] == i) continue;
    any = true;
    out << '(';
    std::uint32_t p = i;
    bool first = true;
    while (!done[p]) {
      if (!first) out << ' ';
      out << p;
      done[p] = true;
      first = false;
      p = image_[p];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<std::uint32_t> out(p.degree());
  simd::kernels().gather_u32(q.data(), p.data(), out.data(), out.size());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> out(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) out[p.image_[i]] = i;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Permutation left_normed_commutator(std::span<const Permutation> xs) {
  if (xs.empty()) throw EmptyInput("left-normed commutator of an empty list");
  Permutation acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(acc, xs[i]);
  return acc;
}

}  // namespace nilprob
