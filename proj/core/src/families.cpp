#include "degen/families.hpp"

#include <sstream>
#include <stdexcept>

#include "degen/degeneracy.hpp"
#include "degen/irreducibility.hpp"

namespace degen {

namespace {

IntPoly eisenstein_core(const Int& lead, int m, const std::vector<Int>& b) {
  std::vector<Int> g;
  g.reserve(static_cast<size_t>(m) + 1);
  g.push_back(lead);
  for (int i = 1; i < m; ++i) g.push_back(-2 * b[static_cast<size_t>(i - 1)]);
  g.push_back(-2 * (2 * b[static_cast<size_t>(m - 1)] - 1));
  return IntPoly(std::move(g));
}

void check_eisenstein_params(int m, int ell, const std::vector<Int>& b) {
  if (m < 1) throw std::invalid_argument("eisenstein family: m must be >= 1");
  if (ell < 2) throw std::invalid_argument("eisenstein family: ell must be >= 2");
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("eisenstein family: need exactly m parameters b");
  for (const Int& bi : b)
    if (bi < 1) throw std::invalid_argument("eisenstein family: b_i must be >= 1");
}

}  // namespace

FamilySpec eisenstein_power_family(int m, int ell, const std::vector<Int>& b) {
  check_eisenstein_params(m, ell, b);
  FamilySpec spec;
  spec.name = "eisenstein_power";
  spec.params.emplace_back(m);
  spec.params.emplace_back(ell);
  spec.params.insert(spec.params.end(), b.begin(), b.end());
  spec.produced = compose_power(eisenstein_core(Int(1), m, b), ell);
  spec.expect_degenerate = true;
  spec.expect_irreducible = true;
  spec.expect_class_size = ell;
  return spec;
}

FamilySpec eisenstein_power_family_general(int m, int ell, const Int& b0,
                                           const std::vector<Int>& b) {
  check_eisenstein_params(m, ell, b);
  if (b0 < 1) throw std::invalid_argument("eisenstein family: b0 must be >= 1");
  FamilySpec spec;
  spec.name = "eisenstein_power_general";
  spec.params.emplace_back(m);
  spec.params.emplace_back(ell);
  spec.params.push_back(b0);
  spec.params.insert(spec.params.end(), b.begin(), b.end());
  spec.produced = compose_power(eisenstein_core(2 * b0 - 1, m, b), ell);
  spec.expect_degenerate = true;
  spec.expect_irreducible = true;
  spec.expect_class_size = ell;
  return spec;
}

FamilySpec linear_times_quadratic(const Int& a, const Int& b) {
  if (b == 0)
    throw std::invalid_argument("linear_times_quadratic: b must be nonzero");
  FamilySpec spec;
  spec.name = "linear_times_quadratic";
  spec.params = {a, b};
  spec.produced = mul(IntPoly({Int(1), a}), IntPoly({Int(1), Int(0), b}));
  spec.expect_degenerate = true;
  spec.expect_irreducible = false;
  return spec;
}

FamilySpec cyclo_times_poly(const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("cyclo_times_poly: g must be nonzero");
  FamilySpec spec;
  spec.name = "cyclo_times_poly";
  spec.produced = mul(IntPoly{1, 0, 1}, g);
  spec.expect_degenerate = true;
  if (g.deg() >= 1) spec.expect_irreducible = false;
  return spec;
}

FamilySpec linear_times_quadratic_general(const Int& a, const Int& b, const Int& c,
                                          const Int& d) {
  if (a == 0 || c == 0)
    throw std::invalid_argument("linear_times_quadratic_general: a and c must be nonzero");
  if (d == 0)
    throw std::invalid_argument("linear_times_quadratic_general: d must be nonzero");
  FamilySpec spec;
  spec.name = "linear_times_quadratic_general";
  spec.params = {a, b, c, d};
  spec.produced = mul(IntPoly({a, b}), IntPoly({c, Int(0), d}));
  spec.expect_degenerate = true;
  spec.expect_irreducible = false;
  return spec;
}

FamilySpec quadratic_degenerate_family(QuadraticKind kind, const Int& a) {
  if (a == 0) throw std::invalid_argument("quadratic_degenerate_family: a must be nonzero");
  FamilySpec spec;
  spec.params = {a};
  spec.expect_degenerate = true;
  spec.expect_irreducible = true;  // fails for kind sqrt when a is a perfect square
  switch (kind) {
    case QuadraticKind::sqrt:
      spec.name = "quadratic_sqrt";
      spec.produced = IntPoly({Int(1), Int(0), -a});
      break;
    case QuadraticKind::order3:
      spec.name = "quadratic_order3";
      spec.produced = IntPoly({Int(1), a, a * a});
      break;
    case QuadraticKind::order4:
      spec.name = "quadratic_order4";
      spec.produced = IntPoly({Int(1), 2 * a, 2 * a * a});
      break;
    case QuadraticKind::order6:
      spec.name = "quadratic_order6";
      spec.produced = IntPoly({Int(1), 3 * a, 3 * a * a});
      break;
  }
  return spec;
}

FamilyReport verify_family(const FamilySpec& spec) {
  FamilyReport report;
  report.spec = spec;

  auto record = [&report](std::string what, bool checked, bool passed, std::string detail) {
    report.outcomes.push_back({std::move(what), checked, passed, std::move(detail)});
    if (checked && !passed) report.all_checked_passed = false;
  };

  DegeneracyReport dr = is_degenerate(spec.produced);
  {
    std::ostringstream os;
    os << "witness orders {";
    for (size_t i = 0; i < dr.witness_orders.size(); ++i)
      os << (i ? "," : "") << dr.witness_orders[i];
    os << "}";
    record("degenerate", true, dr.degenerate == spec.expect_degenerate, os.str());
  }

  bool irreducible_known = false;
  bool irreducible_value = false;
  if (spec.expect_irreducible.has_value()) {
    if (spec.produced.deg() <= 4) {
      irreducible_value = is_irreducible_q(spec.produced);
      irreducible_known = true;
      record("irreducible", true, irreducible_value == *spec.expect_irreducible,
             irreducible_value ? "irreducible over Q" : "reducible over Q");
    } else {
      bool eis = eisenstein_check(spec.produced, Int(2));
      if (eis && *spec.expect_irreducible) {
        irreducible_value = true;
        irreducible_known = true;
        record("irreducible", true, true, "certified by Eisenstein at 2");
      } else {
        record("irreducible", false, false,
               "degree > 4: expected (unverified), no full factorization engine");
      }
    }
  }

  if (spec.expect_class_size.has_value()) {
    if (irreducible_known && irreducible_value) {
      try {
        ClassStructure cs = equivalence_stats(spec.produced);
        std::ostringstream os;
        os << "(s,ell)=(" << cs.s << "," << cs.ell << ")";
        record("class_size", true, cs.ell == *spec.expect_class_size, os.str());
      } catch (const std::exception& e) {
        record("class_size", true, false, e.what());
      }
    } else {
      record("class_size", false, false, "needs verified irreducibility");
    }
  }

  if (spec.name == "eisenstein_power" || spec.name == "eisenstein_power_general") {
    int ell = static_cast<int>(spec.params[1].get_si());
    PowerDecomposition pd = decompose_power(spec.produced);
    std::ostringstream os;
    os << "f = g(X^" << pd.m << ")";
    record("power_shape", true, pd.m % ell == 0, os.str());
  }
  return report;
}

}  // namespace degen
