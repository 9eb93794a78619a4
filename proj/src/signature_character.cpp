#include "sigchar/signature_character.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "sigchar/characters.hpp"

namespace sigchar {

namespace {

std::vector<std::string> merge_uses(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SignatureCharacter::SignatureCharacter(int n, std::vector<std::int64_t> coeffs, Provenance prov,
                                       std::vector<std::string> uses)
    : n_(n), coeffs_(std::move(coeffs)), prov_(prov), uses_(std::move(uses)) {
  if (coeffs_.size() != partitions(n).size()) {
    throw std::domain_error("SignatureCharacter: coefficient count != p(n)");
  }
  std::sort(uses_.begin(), uses_.end());
  uses_.erase(std::unique(uses_.begin(), uses_.end()), uses_.end());
}

SignatureCharacter SignatureCharacter::zero(int n) {
  return SignatureCharacter(n, std::vector<std::int64_t>(partitions(n).size(), 0));
}

std::int64_t SignatureCharacter::coeff(const Partition& lambda) const {
  return coeffs_[partition_index(lambda)];
}

std::int64_t SignatureCharacter::coeff_sgn() const { return coeffs_.back(); }
std::int64_t SignatureCharacter::coeff_trivial() const { return coeffs_.front(); }

SignatureCharacter& SignatureCharacter::mark_conjectural(const std::string& use) {
  prov_ = Provenance::conjectural;
  uses_ = merge_uses(uses_, {use});
  return *this;
}

SignatureCharacter operator+(const SignatureCharacter& a, const SignatureCharacter& b) {
  if (a.n_ != b.n_) throw std::domain_error("SignatureCharacter: size mismatch");
  std::vector<std::int64_t> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  Provenance p = (a.conjectural() || b.conjectural()) ? Provenance::conjectural
                                                      : Provenance::proven;
  return SignatureCharacter(a.n_, std::move(c), p, merge_uses(a.uses_, b.uses_));
}

SignatureCharacter operator-(const SignatureCharacter& a, const SignatureCharacter& b) {
  return a + (-1 * b);
}

SignatureCharacter operator*(std::int64_t k, const SignatureCharacter& a) {
  std::vector<std::int64_t> c(a.coeffs_);
  for (auto& v : c) v *= k;
  return SignatureCharacter(a.n_, std::move(c), a.prov_, a.uses_);
}

std::string SignatureCharacter::str(bool include_zeros) const {
  const auto& all = partitions(n_);
  std::string out;
  // Smallest partition first, matching the usual table layout.
  for (int i = static_cast<int>(all.size()) - 1; i >= 0; --i) {
    std::int64_t c = coeffs_[i];
    if (c == 0 && !include_zeros) continue;
    if (c >= 0 && !out.empty()) out += '+';
    if (c < 0) out += '-';
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += '(' + all[i].str_compact() + ')';
  }
  if (out.empty()) out = "0";
  return out;
}

std::ostream& operator<<(std::ostream& os, const SignatureCharacter& s) { return os << s.str(); }

std::vector<std::int64_t> standard_w_multiplicities(const Multisegment& m) {
  return kostka_column(jordan_type(m));
}

Partition max_lambda(const Multisegment& m) { return jordan_type(m).transpose(); }

SignatureCharacter sgn_twist(const SignatureCharacter& s) {
  const auto& all = partitions(s.n());
  std::vector<std::int64_t> c(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    c[partition_index(all[i].transpose())] = s.coeffs()[i];
  }
  return SignatureCharacter(s.n(), std::move(c), s.provenance(), s.conjecture_uses());
}

SignatureCharacter normalize(const SignatureCharacter& s, const Partition& lambda_max) {
  std::int64_t c = s.coeff(lambda_max);
  if (c != 1 && c != -1) {
    throw std::domain_error("normalize: coefficient at lambda_max is not +-1");
  }
  return c == 1 ? s : -1 * s;
}

}  // namespace sigchar
