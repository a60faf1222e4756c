#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "compare.hpp"
#include "fixtures.hpp"
#include "gafunc/function.hpp"
#include "gafunc/minpoly.hpp"
#include "golden.hpp"

using namespace gafunc;
using namespace gafunc::testing;

namespace {
FunctionOptions no_cache(Method m = Method::recursive) { return FunctionOptions{m, nullptr}; }
}  // namespace

TEST(FunctionSpec, ParseBuiltins) {
  EXPECT_EQ(FunctionSpec::parse("exp").name(), "exp");
  EXPECT_EQ(FunctionSpec::parse("pow:1/3").name(), "pow:1/3");
  EXPECT_EQ(FunctionSpec::parse("sqrt").name(), "sqrt");
  EXPECT_THROW(FunctionSpec::parse("tan"), ParseError);
  EXPECT_THROW(FunctionSpec::parse("pow:x"), ParseError);
}

TEST(FunctionSpec, DerivativeTowers) {
  const int d = 50;
  const Complex z(BigFloat(Rational(3, 2), d), BigFloat(Rational(1, 3), d));
  // d^3/dz^3 log z = 2 / z^3
  Complex expected = Complex(2L) / pow(z, 3L);
  EXPECT_LT(log10_abs(abs(FunctionSpec::log().derivative(z, 3) - expected)), -45);
  // d^2/dz^2 z^(1/2) = -1/4 z^(-3/2)
  expected = Complex(BigFloat(Rational(-1, 4), d)) * pow(z, Rational(-3, 2));
  EXPECT_LT(log10_abs(abs(FunctionSpec::sqrt().derivative(z, 2) - expected)), -45);
  // d^2/dz^2 1/z = 2 / z^3
  EXPECT_LT(log10_abs(abs(FunctionSpec::inv().derivative(z, 2) - Complex(2L) / pow(z, 3L))), -45);
  // pow:3 fourth derivative vanishes
  EXPECT_TRUE(is_zero(FunctionSpec::pow(Rational(3)).derivative(z, 4)));
  // sin'' = -sin
  EXPECT_EQ(FunctionSpec::sin().derivative(z, 2), -sin(z));
  EXPECT_EQ(FunctionSpec::cos().derivative(z, 5), -sin(z));
}

TEST(FunctionSpec, Singularities) {
  const Complex neg(BigFloat(-2L, 40));
  const Complex zero(BigFloat(0L, 40));
  EXPECT_TRUE(FunctionSpec::log().singular_at(neg, 0));
  EXPECT_TRUE(FunctionSpec::log().singular_at(zero, 0));
  EXPECT_TRUE(FunctionSpec::sqrt().singular_at(neg, 0));
  EXPECT_TRUE(FunctionSpec::inv().singular_at(zero, 0));
  EXPECT_FALSE(FunctionSpec::inv().singular_at(neg, 3));
  EXPECT_FALSE(FunctionSpec::pow(Rational(2)).singular_at(zero, 2));
  EXPECT_TRUE(FunctionSpec::pow(Rational(-2)).singular_at(zero, 0));
}

TEST(MvFunction, Ex1ClosedForm) {
  auto golden = load_golden_function("ex1_exp.json");
  auto result = mv_function(golden.input, FunctionSpec::exp(), Precision(50), no_cache());
  ASSERT_TRUE(result.real_form.has_value());
  EXPECT_LT(log10_distance(*result.real_form, golden.expected), -40);
  EXPECT_EQ(result.diagnostics.max_derivative_order, 1);
  EXPECT_LT(log10_value(verify_exponential(golden.input, result, Precision(50), no_cache())), -45);
}

TEST(MvFunction, Ex2ClosedForm) {
  auto golden = load_golden_function("ex2_exp.json");
  EXPECT_EQ(golden.input, fixtures::ex2());
  auto result = mv_function(golden.input, FunctionSpec::exp(), Precision(50), no_cache());
  ASSERT_TRUE(result.real_form.has_value());
  EXPECT_LT(log10_distance(*result.real_form, golden.expected), -40);
  EXPECT_EQ(result.diagnostics.max_derivative_order, 3);
  EXPECT_LT(log10_value(verify_exponential(golden.input, result, Precision(50), no_cache())), -45);
}

TEST(MvFunction, Ex3AgainstRepresentationExpm) {
  auto golden = load_golden_function("ex3_exp.json");
  EXPECT_EQ(golden.input, fixtures::ex3());
  auto result = mv_function(golden.input, FunctionSpec::exp(), Precision(50), no_cache());
  ASSERT_TRUE(result.real_form.has_value());
  EXPECT_LT(log10_distance(*result.real_form, golden.expected), -40);
  EXPECT_LT(log10_value(verify_exponential(golden.input, result, Precision(50), no_cache())), -40);
}

TEST(MvFunction, TrivialExponentials) {
  auto zero = Multivector<Rational>(fixtures::kCl30);
  auto r0 = mv_function(zero, FunctionSpec::exp(), Precision(30), no_cache());
  EXPECT_EQ(log10_distance(r0.value, lift_to_complex(Multivector<Rational>::scalar(fixtures::kCl30, 1), 50)), -1000);
  EXPECT_TRUE(is_zero(verify_exponential(zero, r0, Precision(30), no_cache())));

  auto c = Multivector<Rational>::scalar(fixtures::kCl30, Rational(3, 2));
  auto rc = mv_function(c, FunctionSpec::exp(), Precision(40), no_cache());
  EXPECT_LT(log10_abs(abs(rc.value[0] - exp(Complex(Rational(3, 2), 60)))), -40);
  for (std::size_t i = 1; i < rc.value.size(); ++i) EXPECT_TRUE(is_zero(rc.value[i]));
}

TEST(MvFunction, IdentityAndSquareReproduceA) {
  for (const auto& a : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3()}) {
    auto id = mv_function(a, FunctionSpec::identity(), Precision(40), no_cache());
    EXPECT_LT(log10_distance(id.value, lift_to_complex(a, 60)), -40);
    auto sq = mv_function(a, FunctionSpec::pow(Rational(2)), Precision(40), no_cache());
    EXPECT_LT(log10_distance(sq.value, lift_to_complex(a * a, 60)), -38);
    auto inv = mv_function(a, FunctionSpec::inv(), Precision(40), no_cache());
    auto product = lift_to_complex(a, 60) * inv.value;
    EXPECT_LT(log10_distance(product, lift_to_complex(Multivector<Rational>::scalar(a.signature(), 1), 60)), -35);
  }
}

TEST(MvFunction, SinCosPythagoras) {
  auto a = fixtures::ex2();
  auto s = mv_function(a, FunctionSpec::sin(), Precision(40), no_cache());
  auto c = mv_function(a, FunctionSpec::cos(), Precision(40), no_cache());
  auto sum = s.value * s.value + c.value * c.value;
  EXPECT_LT(log10_distance(sum, lift_to_complex(Multivector<Rational>::scalar(a.signature(), 1), 60)), -35);
}

TEST(MvFunction, LogInvertsExp) {
  // exp(A) is rounded to a rational multivector 100 digits deep; on inputs with
  // simple roots in the strip |Im| < pi the rounding perturbs log(exp(A)) far
  // below the 40 digits compared.
  const char* inputs[] = {"1/2 + 1/3*e1 - 1/4*e2 + 1/5*e12", "-1/3 + 2/3*e1 + 1/2*e2 - 1/7*e3 + 1/4*e123",
                          "1/5 - 1/2*e1 + 1/3*e2 + 1/4*e12"};
  const Signature sigs[] = {Signature(2, 0), Signature(3, 0), Signature(1, 1)};
  for (int k = 0; k < 3; ++k) {
    auto a = parse_multivector(inputs[k], sigs[k]);
    for (const auto& sf : squarefree_decomposition(minimal_poly(a).mu)) ASSERT_EQ(sf.multiplicity, 1);
    auto e = mv_function(a, FunctionSpec::exp(), Precision(110), no_cache());
    ASSERT_TRUE(e.real_form.has_value());
    auto rounded = map_coefficients<Rational>(*e.real_form, [](const BigFloat& x) {
      Rational q;
      mpfr_get_q(q.get_mpq_t(), x.raw());
      return q;
    });
    auto l = mv_function(rounded, FunctionSpec::log(), Precision(50), no_cache());
    EXPECT_LT(log10_distance(l.value, lift_to_complex(a, 60)), -40) << inputs[k];
  }
}

TEST(MvFunction, SqrtSquaredOnPositiveSpectrum) {
  auto b = fixtures::ex2();  // roots 1, 3, 5
  auto root = mv_function(b, FunctionSpec::sqrt(), Precision(40), no_cache());
  EXPECT_LT(log10_distance(root.value * root.value, lift_to_complex(b, 60)), -38);
  auto third = mv_function(b, FunctionSpec::pow(Rational(1, 3)), Precision(40), no_cache());
  EXPECT_LT(log10_distance(third.value * third.value * third.value, lift_to_complex(b, 60)), -38);
  auto l = mv_function(b, FunctionSpec::log(), Precision(40), no_cache());
  EXPECT_TRUE(l.real_form.has_value());
}

TEST(MvFunction, SingularFunctionNamesRoot) {
  auto zero = Multivector<Rational>(fixtures::kCl30);
  try {
    mv_function(zero, FunctionSpec::log(), Precision(30), no_cache());
    FAIL() << "expected SingularFunction";
  } catch (const SingularFunction& e) {
    EXPECT_EQ(e.function(), "log");
    EXPECT_FALSE(e.root().empty());
  }
  auto neg = Multivector<Rational>::scalar(fixtures::kCl30, Rational(-2));
  EXPECT_THROW(mv_function(neg, FunctionSpec::sqrt(), Precision(30), no_cache()), SingularFunction);
  EXPECT_THROW(mv_function(fixtures::idempotent(), FunctionSpec::inv(), Precision(30), no_cache()), SingularFunction);
}

TEST(MvFunction, NonDefectiveNeverAsksForDerivatives) {
  int highest = -1;
  FunctionSpec probe("probe", [&](const Complex& z, int t) {
    highest = std::max(highest, t);
    return exp(z);
  });
  auto a = fixtures::ex3();  // (x-1)^2 factor: defective
  mv_function(fixtures::idempotent(), probe, Precision(30), no_cache());
  EXPECT_EQ(highest, 0);
  mv_function(a, probe, Precision(30), no_cache());
  EXPECT_EQ(highest, 1);
}

TEST(MvFunction, MethodsAgree) {
  for (const auto& a : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(), fixtures::spinor()}) {
    auto rec = mv_function(a, FunctionSpec::exp(), Precision(50), no_cache(Method::recursive));
    auto cls = mv_function(a, FunctionSpec::exp(), Precision(50), no_cache(Method::classical));
    auto chi = mv_function(a, FunctionSpec::exp(), Precision(50), no_cache(Method::charpoly));
    EXPECT_LT(log10_distance(rec.value, cls.value), -42);
    EXPECT_LT(log10_distance(rec.value, chi.value), -42);
  }
}

TEST(MvFunction, CacheReusesBasis) {
  SpectralCache cache;
  FunctionOptions opts{Method::recursive, &cache};
  auto first = mv_function(fixtures::ex2(), FunctionSpec::exp(), Precision(30), opts);
  auto second = mv_function(fixtures::ex2(), FunctionSpec::sin(), Precision(30), opts);
  EXPECT_FALSE(first.diagnostics.basis_reused);
  EXPECT_TRUE(second.diagnostics.basis_reused);
  EXPECT_EQ(cache.size(), 1u);
  auto other_precision = mv_function(fixtures::ex2(), FunctionSpec::sin(), Precision(40), opts);
  EXPECT_FALSE(other_precision.diagnostics.basis_reused);
}

TEST(MvFunction, CacheIsThreadSafe) {
  SpectralCache cache;
  std::atomic<int> failures = 0;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int k = 0; k < 3; ++k) {
        auto r = mv_function(fixtures::ex1(), FunctionSpec::exp(), Precision(30), {Method::recursive, &cache});
        if (!r.real_form) ++failures;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(failures, 0);
  EXPECT_EQ(cache.size(), 1u);
}

TEST(RealReduction, Behaviour) {
  const Signature s(1, 0);
  Multivector<Complex> real(s, {Complex(BigFloat(2L, 50)), Complex(BigFloat(-3L, 50))});
  auto r = real_reduction(real, realness_tolerance(50));
  EXPECT_EQ(r[0], BigFloat(2L));
  Multivector<Complex> noisy(s, {Complex(BigFloat(1L, 50), BigFloat(Rational(1, 1000), 50)), Complex(0L)});
  EXPECT_THROW(real_reduction(noisy, pow10(-40, 50)), RealnessFailure);
}
