#include "cheb/bounds.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "cheb/cheb_exact.hpp"
#include "cheb/error.hpp"

namespace cheb {

namespace {

using Float = boost::multiprecision::cpp_dec_float_100;

BigInt ipow(std::uint64_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

Float to_float(const Rational& r) {
  return Float(boost::multiprecision::numerator(r)) / Float(boost::multiprecision::denominator(r));
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

Rational sigma() { return Rational(BigInt(2118456563), BigInt(1000000000)); }
Rational sigma_upper() { return Rational(BigInt(2118456564), BigInt(1000000000)); }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "SATISFIED";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

Rational crown_bound(const std::vector<ChiefFactorModule>& a,
                        const std::vector<ChiefFactorModule>& b) {
  Rational total = 0;
  for (const auto& v : a) {
    const BigInt dt = BigInt(v.delta * static_cast<std::size_t>(v.theta));
    const BigInt qn = ipow(v.q, v.n);
    const Rational c_v(v.q, v.q - 1);
    const Rational first = (Rational(dt) + c_v) * Rational(qn);
    const Rational second = (Rational(ceil_div(dt, BigInt(v.n))) + Rational(qn, qn - 1)) * Rational(v.h_order);
    total += std::min(first, second);
  }
  std::size_t max_delta = 0;
  for (const auto& v : b) max_delta = std::max(max_delta, v.delta);
  return total + Rational(max_delta) + sigma_upper();
}

Rational generator_bound(const std::vector<ChiefFactorModule>& a, std::size_t d) {
  Rational sum = 0;
  for (const auto& v : a) {
    const BigInt qn = ipow(v.q, v.n);
    sum += 1 + Rational(qn * v.h_order, qn - 1);
  }
  return Rational(d) * sum + sigma_upper();
}

AlphaInputs AlphaInputs::from(const ChiefFactorModule& v) {
  return {v.q, v.n, v.delta, v.h_order, v.p_fix, v.m};
}

std::uint64_t AlphaInputs::module_order() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= q;
  return r;
}

AlphaValue alpha_u(const AlphaInputs& v) {
  AlphaValue out;
  if (v.h_order == 1) {
    const BigInt qd = ipow(v.q, v.delta);
    BigInt qi = 1;
    out.value = 0;
    for (std::size_t i = 0; i < v.delta; ++i) {
      out.value += Rational(qd, qd - qi);
      qi *= v.q;
    }
    return out;
  }
  const int theta = v.delta == 1 ? 0 : 1;
  const BigInt dt = BigInt(v.delta * static_cast<std::size_t>(theta));
  const BigInt qn = ipow(v.q, v.n);
  out.branch2 = (Rational(ceil_div(dt, BigInt(v.n))) + Rational(qn, qn - 1)) * Rational(v.h_order);
  out.value = *out.branch2;
  if (v.m && v.p_fix > 0) {
    out.branch1 = (Rational(dt) + Rational(*v.m) + Rational(v.q, v.q - 1)) / v.p_fix;
    out.value = std::min(*out.branch1, *out.branch2);
  }
  return out;
}

AlphaRatioResult alpha_ratio_check(const AlphaInputs& v, const BigInt& group_order) {
  AlphaRatioResult r;
  r.alpha = alpha_u(v).value;
  const BigInt module = ipow(v.q, v.n);
  const BigInt u_order = ipow(v.q, v.n * v.delta);
  r.lambda = Rational(group_order, BigInt(v.h_order) * u_order);

  const Float ratio = to_float(r.alpha) / boost::multiprecision::sqrt(Float(group_order));
  const Float root_u = boost::multiprecision::sqrt(Float(u_order));
  const Float threshold = Float(5) / 3 * (root_u - 1) / root_u;
  r.ratio = ratio.convert_to<double>();
  r.threshold = threshold.convert_to<double>();
  // equality (to 80 digits) counts as failing the strict inequality
  r.passes = threshold - ratio > Float("1e-80");
  if (r.passes) return r;

  if (BigInt(v.h_order) < module) {
    const std::size_t d = v.delta;
    if (d == 2 && module == 4 && r.lambda == 1) r.exceptional_case = 1;
    else if (d == 2 && module == 3 && r.lambda <= 2) r.exceptional_case = 2;
    else if (d == 1 && module >= 4 && module <= 7 && r.lambda == 1) r.exceptional_case = 3;
    else if (d == 1 && module == 3 && r.lambda <= 3) r.exceptional_case = 4;
  }
  if (!r.exceptional_case)
    throw Error(ErrorCode::UnexpectedException,
                "alpha_U/sqrt|G| = " + std::to_string(r.ratio) + " >= " + std::to_string(r.threshold) +
                    " outside the listed exceptions (delta=" + std::to_string(v.delta) +
                    ", q^n=" + module.str() + ", |H|=" + std::to_string(v.h_order) +
                    ", lambda=" + to_string(r.lambda) + ")");
  return r;
}

BinomialTail binomial_tail_check(std::size_t l, const Rational& p, std::size_t k_max) {
  if (p <= 0 || p > 1) throw Error(ErrorCode::BadProbability, "p must lie in (0, 1], got " + to_string(p));
  if (k_max < l) throw std::invalid_argument("binomial_tail_check: K must be at least l");
  BinomialTail out;
  const Rational fail = 1 - p;
  Rational term = 1;  // C(l,l) p^l
  for (std::size_t i = 0; i < l; ++i) term *= p;
  out.partial_sum = 0;
  for (std::size_t k = l; k <= k_max; ++k) {
    out.partial_sum += term;
    // C(k+1,l)/C(k,l) = (k+1)/(k+1-l)
    term *= Rational(k + 1, k + 1 - l) * fail;
  }
  out.bound = 1 / p;
  out.ok = out.partial_sum <= out.bound;
  return out;
}

Verdict five_thirds_check(const Rational& exact, std::uint64_t order, bool is_klein) {
  const Rational lhs = exact * exact;
  const Rational rhs = Rational(25, 9) * Rational(order);
  if (lhs < rhs) return Verdict::Satisfied;
  if (lhs == rhs && is_klein) return Verdict::Satisfied;
  return Verdict::Violated;
}

Rational five_thirds_upper(std::uint64_t order) {
  const BigInt scale = ipow(10, 15);
  const BigInt radicand = BigInt(order) * scale * scale;
  BigInt root = isqrt(radicand);
  if (root * root < radicand) root += 1;
  return Rational(5 * root, 3 * scale);
}

bool BoundReport::any_violated() const {
  return crown == Verdict::Violated || generators == Verdict::Violated ||
         five_thirds == Verdict::Violated || v_property == Verdict::Violated;
}

bool is_klein_four(const PermGroup& g) {
  if (g.order() != 4) return false;
  for (ElemIndex e = 0; e < g.order(); ++e)
    if (g.mul(e, e) != PermGroup::identity()) return false;
  return true;
}

BoundReport evaluate_bounds(const PermGroup& g, const std::string& label, const BoundOptions& options) {
  BoundReport report;
  report.group_id = label;
  report.order = g.order();
  report.soluble = is_soluble(g);
  report.five_thirds_bound = five_thirds_upper(g.order());
  report.d = min_generators(g);

  if (g.is_trivial()) {
    report.exact = Rational(0);
    report.crown_bound = sigma_upper();
    report.generator_bound = sigma_upper();
    report.v_property_bound = sigma_upper();
    report.crown = report.generators = report.v_property = Verdict::Satisfied;
    report.five_thirds = five_thirds_check(0, 1, false);
    return report;
  }

  const SubgroupLattice lattice(g);
  const auto maximals = maximal_classes(lattice);
  const SieveSystem sieves = build_sieves(g, maximals);
  report.exact = chebotarev(sieves, options.sieve_cap).exact;
  if (!report.soluble) return report;

  const CrownData crowns = crown_data(lattice, options.series_variant);
  report.crown_bound = crown_bound(crowns.a, crowns.b);
  report.generator_bound = generator_bound(crowns.a, report.d);
  report.generator_bound_fallback = crowns.a.empty();

  std::size_t max_b = 0;
  for (const auto& v : crowns.b) max_b = std::max(max_b, v.delta);
  Rational vp_total = Rational(max_b) + sigma_upper();
  for (const auto& v : crowns.a) {
    report.per_factor.push_back({v.label, alpha_u(AlphaInputs::from(v))});
    const auto omega = omega_membership(lattice, maximals, v);
    vp_total += v_property_sum(build_sieves(g, maximals, omega), options.sieve_cap);
  }
  report.v_property_bound = vp_total;

  const Rational& c = *report.exact;
  report.crown = c <= report.crown_bound ? Verdict::Satisfied : Verdict::Violated;
  const Rational generator_target =
      report.generator_bound_fallback ? Rational(report.d) + sigma_upper() : report.generator_bound;
  report.generators = c <= generator_target ? Verdict::Satisfied : Verdict::Violated;
  report.v_property = c <= report.v_property_bound ? Verdict::Satisfied : Verdict::Violated;
  report.five_thirds = five_thirds_check(c, g.order(), is_klein_four(g));
  return report;
}

}  // namespace cheb
