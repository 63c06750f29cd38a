#pragma once

#include <cstdint>
#include <vector>

#include "clt/special_functions.hpp"

namespace clt {

/// A Dirichlet character mod q stored as its value table on 0..q-1.
///
/// Characters are labelled by exponent vectors over a fixed generator set of
/// (Z/qZ)^*; the all-zero vector (index 0) is the principal character.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::vector<Complex> values, std::size_t index,
                     std::vector<std::uint64_t> exponents, std::vector<std::uint64_t> orders);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t index() const noexcept { return index_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  /// kappa: 0 when chi(-1) = 1, 1 when chi(-1) = -1.
  int parity() const noexcept { return parity_; }
  std::uint64_t conductor() const noexcept { return conductor_; }
  bool is_primitive() const noexcept { return conductor_ == modulus_; }
  bool is_principal() const noexcept { return index_ == 0; }
  bool is_real() const noexcept;

  Complex operator()(std::int64_t n) const noexcept;

  DirichletCharacter conj() const;

  /// The primitive character mod conductor() that induces this one.
  DirichletCharacter primitive_inducing() const;

 private:
  std::uint64_t modulus_;
  std::vector<Complex> values_;
  std::size_t index_;
  std::vector<std::uint64_t> exponents_;
  std::vector<std::uint64_t> orders_;
  int parity_ = 0;
  std::uint64_t conductor_ = 1;
};

/// All phi(q) characters mod q, principal first. Memory is q * phi(q).
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q);

/// Number of characters mod q and a single character by index, without
/// building the others.
std::size_t character_count(std::uint64_t q);
DirichletCharacter dirichlet_character(std::uint64_t q, std::size_t index);

/// Least quasiperiod.
std::uint64_t conductor(const DirichletCharacter& chi);

/// tau(chi) = sum_{a=1}^{q} chi(a) e(a/q).
Complex gauss_sum(const DirichletCharacter& chi);

/// epsilon(chi) = tau(chi) / (i^kappa sqrt q); primitive characters only.
Complex epsilon_factor(const DirichletCharacter& chi);

/// sum_{n in Z} n^kappa e^{-pi n^2 z / q}, exactly as printed: no chi(n)
/// factor, so it vanishes identically for odd characters.
Complex theta_nu_literal(Complex z, const DirichletCharacter& chi);

/// sum_{n in Z} chi(n) n^kappa e^{-pi n^2 z / q}, the theta series that
/// satisfies the transformation law with epsilon(chi).
Complex theta_nu(Complex z, const DirichletCharacter& chi);

/// L(s, chi). Series route (Hurwitz Euler-Maclaurin) for Re s > 1, the
/// completed-xi route for Re s <= 1; imprimitive characters are reduced to
/// their primitive inducing character times finite Euler factors.
Complex l_function(Complex s, const DirichletCharacter& chi);

/// L(s, chi) by Euler-Maclaurin on each residue class. Valid for
/// Re s > -20; for non-principal chi also at s = 1.
Complex l_function_series(Complex s, const DirichletCharacter& chi);

/// xi(s, chi) = (q/pi)^{(s+kappa)/2} Gamma((s+kappa)/2) L(s, chi) via the
/// incomplete-gamma series at z = 1. Primitive non-principal chi only.
Complex xi_completed_l(Complex s, const DirichletCharacter& chi);

}  // namespace clt
