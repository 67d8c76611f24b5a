#include "bsr/frobenius.hpp"

#include <utility>
#include <vector>

#include "bsr/errors.hpp"

namespace bsr {

PrimePower::PrimePower(Int p, unsigned e) : p_(std::move(p)), e_(e) {
  if (!is_prime(p_)) throw precondition_error("PrimePower: " + p_.str() + " is not prime");
  if (e_ < 1) throw precondition_error("PrimePower: exponent must be >= 1");
  value_ = pow_int(p_, e_);
}

MonomialIdeal bracket_power(const MonomialIdeal& j, const Int& q) {
  if (q < 1) throw precondition_error("bracket_power: q must be >= 1");
  std::vector<Monomial> gens;
  gens.reserve(j.num_generators());
  for (const Monomial& g : j.generators()) gens.push_back(g.scaled(q));
  return MonomialIdeal(j.dim(), std::move(gens));
}

bool bracket_member(const Monomial& m, const MonomialIdeal& j, const Int& q) {
  if (q < 1) throw precondition_error("bracket_member: q must be >= 1");
  return j.contains(m.quotient_floor(q));
}

MonomialIdeal cartier_image(const MonomialIdeal& ideal, const PrimePower& q) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const Monomial& g : ideal.generators())
    gens.push_back(g.quotient_floor(q.value()));
  return MonomialIdeal(ideal.dim(), std::move(gens));
}

std::set<Int> cartier_jump_set(const MonomialIdeal& a, const PrimePower& q,
                               const Int& limit, const ChainOptions& opts) {
  if (a.is_zero() || a.is_unit())
    throw precondition_error("cartier_jump_set: ideal must be nonzero and proper");
  if (limit > opts.step_budget)
    throw resource_error("cartier_jump_set: chain length " + limit.str() +
                         " exceeds step budget " + opts.step_budget.str());
  std::set<Int> jumps;
  MonomialIdeal cur = MonomialIdeal::whole_ring(a.dim());  // a^0
  MonomialIdeal cur_img = cur;                             // Cartier fixes the whole ring
  for (Int n = 0; n < limit; ++n) {
    MonomialIdeal next = multiply(cur, a);
    MonomialIdeal next_img = cartier_image(next, q);
    if (cur_img != next_img) jumps.insert(n);
    cur = std::move(next);
    cur_img = std::move(next_img);
  }
  return jumps;
}

std::set<Int> nu_set_chain(const MonomialIdeal& a, const PrimePower& q,
                           const ChainOptions& opts) {
  Int limit = Int(a.num_generators()) * q.value();
  return cartier_jump_set(a, q, limit, opts);
}

}  // namespace bsr
