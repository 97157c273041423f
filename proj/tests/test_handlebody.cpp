#include "support.hpp"

#include <kirby/decomposition_io.hpp>

#include <doctest.h>

using namespace kirby;
using namespace kirby::test;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

// Congruence oracle: E^T A E with E = I + s e_j e_i^T, i.e. column i of E
// gains s at row j.
IntMatrix slide_oracle(const IntMatrix& a, Eigen::Index i, Eigen::Index j, long long s) {
  IntMatrix e = IntMatrix::Identity(a.rows(), a.rows());
  e(j, i) = s;
  return e.transpose() * a * e;
}

HandleDecomposition with_dotted(Integer incidence_k1, Integer incidence_k2) {
  std::vector<TwoHandle> hs{{"k1", Integer(-1), KnotTag::Unknot}, {"k2", Integer(-3), KnotTag::Unknot}};
  IntMatrix inc(1, 2);
  inc << incidence_k1, incidence_k2;
  return HandleDecomposition(1, {"d1"}, hs, ext(mat({{-1, 2}, {2, -3}})), inc, 0, 0);
}

}  // namespace

TEST_CASE("ext int arithmetic") {
  const ExtInt u = ExtInt::unknown();
  CHECK((u + 3).is_unknown());
  CHECK((ExtInt(2) * u).is_unknown());
  CHECK((ExtInt(2) * 3).is(6));
  CHECK(!certainly_equal(u, u));
  CHECK(identical(u, u));
  CHECK(certainly_equal(ExtInt(4), ExtInt(4)));
  CHECK(u.to_string() == "?");
}

TEST_CASE("euler characteristic") {
  CHECK(HandleCounts{1, 0, 12, 2, 1}.euler_characteristic() == 12);
  CHECK(HandleCounts{1, 0, 0, 0, 1}.euler_characteristic() == 2);
  CHECK(HandleCounts{1, 0, 24, 2, 1}.euler_characteristic() == 24);
  CHECK(counts(HandleDecomposition()) == HandleCounts{1, 0, 0, 0, 0});
  CHECK(euler_characteristic(HandleDecomposition()) == 1);
}

TEST_CASE("union expression") {
  CHECK(HandleCounts{1, 0, 12, 2, 1}.union_expression() ==
        "one 0-handle ∪ 12 2-handles ∪ two 3-handles ∪ one 4-handle");
  CHECK(HandleCounts{1, 1, 1, 0, 0}.union_expression() == "one 0-handle ∪ one 1-handle ∪ one 2-handle");
  CHECK(HandleCounts{1, 0, 12, 2, 1}.to_string() == "(1, 0, 12, 2, 1)");
}

TEST_CASE("decomposition invariants are validated") {
  std::vector<TwoHandle> hs{{"a", Integer(-1), KnotTag::Unknot}, {"b", Integer(-2), KnotTag::Unknot}};
  CHECK_THROWS_AS(HandleDecomposition(1, {}, hs, ext(mat({{-1, 1}, {0, -2}})), IntMatrix(0, 2), 0, 0), Error);
  CHECK_THROWS_AS(HandleDecomposition(1, {}, hs, ext(mat({{-1, 0}, {0, -5}})), IntMatrix(0, 2), 0, 0), Error);
  CHECK_THROWS_AS(HandleDecomposition(0, {}, hs, ext(mat({{-1, 0}, {0, -2}})), IntMatrix(0, 2), 0, 0), Error);
  CHECK_THROWS_AS(HandleDecomposition(1, {"d"}, hs, ext(mat({{-1, 0}, {0, -2}})), IntMatrix(0, 2), 0, 0), Error);
  hs[1].label = "a";
  CHECK(kind_of([&] {
          HandleDecomposition(1, {}, hs, ext(mat({{-1, 0}, {0, -2}})), IntMatrix(0, 2), 0, 0);
        }) == ErrorKind::DuplicateLabel);
}

TEST_CASE("handle slide examples") {
  SUBCASE("diag(-1, -1)") {
    const auto x = handle_slide(from_linking(diag({-1, -1})), "k1", "k2", Sign::Plus);
    CHECK(same(known_linking(x), mat({{-2, -1}, {-1, -1}})));
    CHECK(x.knot(0) == KnotTag::Unknown);
    CHECK(x.knot(1) == KnotTag::Unknot);
  }
  SUBCASE("plus then minus restores the matrix") {
    const auto x0 = from_linking(mat({{-4, 1}, {1, -2}}));
    const auto x = handle_slide(handle_slide(x0, "k1", "k2", Sign::Plus), "k1", "k2", Sign::Minus);
    CHECK(same(known_linking(x), known_linking(x0)));
  }
  SUBCASE("[[-4, 1], [1, -2]]") {
    const auto x = handle_slide(from_linking(mat({{-4, 1}, {1, -2}})), "k1", "k2", Sign::Plus);
    CHECK(same(known_linking(x), mat({{-4, -1}, {-1, -2}})));
  }
  SUBCASE("errors") {
    const auto x = from_linking(diag({-1, -1}));
    CHECK(kind_of([&] { handle_slide(x, "k1", "zz", Sign::Plus); }) == ErrorKind::MissingLabel);
    CHECK(kind_of([&] { handle_slide(x, "k1", "k1", Sign::Plus); }) == ErrorKind::Domain);
  }
}

TEST_CASE("handle slide matches the congruence oracle") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<Eigen::Index>(uniform(rng, 2, 6));
    const IntMatrix a = random_symmetric(rng, n, 5);
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, n - 1));
    auto j = static_cast<Eigen::Index>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    const long long s = uniform(rng, 0, 1) ? 1 : -1;
    const auto x = from_linking(a);
    const auto y = handle_slide(x, x.two_handle_labels()[i], x.two_handle_labels()[j], sign_from_int(s));
    CHECK(same(known_linking(y), slide_oracle(a, i, j, s)));
    CHECK(counts(y) == counts(x));
  }
}

TEST_CASE("handle slide updates incidence and propagates unknowns") {
  auto x = with_dotted(2, 3);
  const auto y = handle_slide(x, "k1", "k2", Sign::Minus);
  CHECK(y.incidence()(0, 0) == -1);
  CHECK(y.incidence()(0, 1) == 3);

  x.set_linking(1, 1, ExtInt::unknown());
  const auto z = handle_slide(x, "k1", "k2", Sign::Plus);
  CHECK(z.linking()(0, 0).is_unknown());
  CHECK(z.linking()(1, 1).is_unknown());
  // Unknown never becomes known again.
  const auto w = handle_slide(z, "k1", "k2", Sign::Minus);
  CHECK(w.linking()(0, 0).is_unknown());
}

TEST_CASE("reverse orientation relates the two slide signs") {
  const auto x = from_linking(mat({{-3, 2, 1}, {2, -2, 0}, {1, 0, 4}}));
  const auto minus = handle_slide(x, "k1", "k2", Sign::Minus);
  const auto via =
      reverse_orientation(handle_slide(reverse_orientation(x, "k2"), "k1", "k2", Sign::Plus), "k2");
  CHECK(same(known_linking(minus), known_linking(via)));
}

TEST_CASE("blow up") {
  const auto x = blow_up(HandleDecomposition(), Sign::Minus);
  CHECK(x.two_handle_count() == 1);
  CHECK(x.framing(0).is(-1));
  CHECK(x.knot(0) == KnotTag::Unknot);
  CHECK(x.two_handle_labels()[0] == "k1");

  auto y = from_linking(mat({{-5, 1}, {1, -2}}));
  const long long chi = euler_characteristic(y);
  const auto sig = signature(known_linking(y)).signature();
  for (int i = 0; i < 4; ++i) y = blow_up(y, Sign::Minus);
  CHECK(y.two_handle_count() == 6);
  CHECK(euler_characteristic(y) == chi + 4);
  CHECK(signature(known_linking(y)).signature() == sig - 4);
  CHECK(blow_up(y, Sign::Plus, "e").has_label("e"));
}

TEST_CASE("blow down examples") {
  SUBCASE("single +1 unknot") {
    const auto x = blow_down(blow_up(HandleDecomposition(), Sign::Plus), "k1", true);
    CHECK(x.identical(HandleDecomposition()));
  }
  SUBCASE("[[-1, 1], [1, -2]]") {
    const auto x0 = from_linking(mat({{-1, 1}, {1, -2}}));
    const auto x = blow_down(x0, "k1");
    CHECK(same(known_linking(x), diag({-1})));
    // Removing a -1 handle: det ratio is -1.
    CHECK(determinant(known_linking(x0)) == -determinant(known_linking(x)));
  }
  SUBCASE("errors") {
    auto x = from_linking(mat({{-1, 1}, {1, -2}}));
    CHECK(kind_of([&] { blow_down(x, "k2"); }) == ErrorKind::FramingNotUnit);
    x.set_knot(0, KnotTag::Unknown);
    CHECK(kind_of([&] { blow_down(x, "k1", true); }) == ErrorKind::StrictnessViolation);
    CHECK_NOTHROW(blow_down(x, "k1"));
    x.set_linking(0, 1, ExtInt::unknown());
    CHECK(kind_of([&] { blow_down(x, "k1"); }) == ErrorKind::UnknownLinking);
    CHECK(kind_of([&] { blow_down(with_dotted(1, 0), "k1", true); }) == ErrorKind::StrictnessViolation);
  }
}

TEST_CASE("blow up then blow down is the identity") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto x = from_linking(random_symmetric(rng, uniform(rng, 0, 5), 6));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto y = blow_up(x, s);
      CHECK(blow_down(y, y.two_handle_labels().back(), true).identical(x));
    }
  }
}

TEST_CASE("blow down changes the inertia by one on the framing's side") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a = random_symmetric(rng, uniform(rng, 1, 5), 3);
    const long long f = uniform(rng, 0, 1) ? 1 : -1;
    a(0, 0) = f;
    const auto x = from_linking(a);
    const Inertia before = signature(a);
    const Inertia after = signature(known_linking(blow_down(x, "k1")));
    CHECK(after.zero == before.zero);
    if (f == 1) {
      CHECK(after.positive + 1 == before.positive);
      CHECK(after.negative == before.negative);
    } else {
      CHECK(after.negative + 1 == before.negative);
      CHECK(after.positive == before.positive);
    }
  }
}

TEST_CASE("cancel 1-2 pairs") {
  SUBCASE("single pair") {
    std::vector<TwoHandle> hs{{"k1", ExtInt::unknown(), KnotTag::Unknown}};
    const HandleDecomposition x(1, {"d1"}, hs, ExtMatrix::Constant(1, 1, ExtInt::unknown()), mat({{1}}), 0, 0);
    const auto y = cancel_12(x, "d1", "k1");
    CHECK(counts(y) == HandleCounts{1, 0, 0, 0, 0});
    CHECK(euler_characteristic(y) == euler_characteristic(x));
  }
  SUBCASE("non-meridian") {
    CHECK(kind_of([&] { cancel_12(with_dotted(2, 1), "d1", "k1"); }) == ErrorKind::NonMeridian);
  }
  SUBCASE("other handles are slid off and marked unknown") {
    const auto x = with_dotted(-1, 3);
    const auto y = cancel_12(x, "d1", "k1");
    CHECK(counts(y) == HandleCounts{1, 0, 1, 0, 0});
    CHECK(y.two_handle_labels() == std::vector<std::string>{"k2"});
    CHECK(y.linking()(0, 0).is_unknown());
    CHECK(y.knot(0) == KnotTag::Unknown);
    CHECK(homology_h1(y) == homology_h1(x));
  }
  SUBCASE("untouched handles keep their data") {
    auto x = blow_up(with_dotted(1, 0), Sign::Minus, "e");
    const auto y = cancel_12(x, "d1", "k1");
    CHECK(y.framing(y.index_of_two("k2")).is(-3));
    CHECK(y.framing(y.index_of_two("e")).is(-1));
  }
}

TEST_CASE("cancel_12 preserves chi and H1 on random incidence data") {
  Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const auto ones = static_cast<Eigen::Index>(uniform(rng, 1, 3));
    const auto twos = static_cast<Eigen::Index>(uniform(rng, 1, 4));
    IntMatrix inc = random_matrix(rng, ones, twos, 3);
    inc(0, 0) = uniform(rng, 0, 1) ? 1 : -1;
    std::vector<std::string> ds;
    for (Eigen::Index d = 0; d < ones; ++d) ds.push_back("d" + std::to_string(d + 1));
    std::vector<TwoHandle> hs;
    const IntMatrix l = random_symmetric(rng, twos, 4);
    for (Eigen::Index k = 0; k < twos; ++k) hs.push_back({"k" + std::to_string(k + 1), l(k, k), KnotTag::Unknot});
    const HandleDecomposition x(1, ds, hs, ext(l), inc, 0, 0);
    const auto y = cancel_12(x, "d1", "k1");
    CHECK(euler_characteristic(y) == euler_characteristic(x));
    CHECK(homology_h1(y) == homology_h1(x));
    CHECK(y.one_handles().size() + 1 == x.one_handles().size());
  }
}

TEST_CASE("three- and four-handles") {
  auto x = from_linking(IntMatrix(IntMatrix::Identity(12, 12)));
  CHECK(add_three_handles(x, 0).identical(x));
  x = add_four_handle(add_three_handles(x, 2));
  CHECK(counts(x) == HandleCounts{1, 0, 12, 2, 1});
  CHECK(euler_characteristic(add_three_handles(x, 2)) == euler_characteristic(x) - 2);
  CHECK(kind_of([&] { add_four_handle(x); }) == ErrorKind::DuplicateFourHandle);
}

TEST_CASE("homology of decompositions") {
  CHECK(homology_h1(from_linking(diag({-2}))).is_trivial());
  const HandleDecomposition bp(1, {"d1"}, {{"k1", ExtInt::unknown(), KnotTag::Unknown}},
                               ExtMatrix::Constant(1, 1, ExtInt::unknown()), mat({{3}}), 0, 0);
  CHECK(homology_h1(bp) == AbelianGroup(0, {Integer(3)}));
  const HandleDecomposition circle(1, {"d1"}, {}, ExtMatrix(0, 0), IntMatrix(1, 0), 0, 0);
  CHECK(homology_h1(circle) == AbelianGroup(1, {}));
}

TEST_CASE("boundary H1 order") {
  CHECK(boundary_h1_order(from_linking(diag({-4}))) == Integer(4));
  CHECK(boundary_h1_order(from_linking(mat({{-5, 1}, {1, -2}}))) == Integer(9));
  CHECK(!boundary_h1_order(from_linking(diag({0}))).has_value());
  CHECK(kind_of([&] { boundary_h1_order(with_dotted(1, 0)); }) == ErrorKind::HasOneHandles);
  CHECK(kind_of([&] { boundary_h1_order(add_four_handle(from_linking(diag({1})))); }) ==
        ErrorKind::HasHigherHandles);
  auto x = from_linking(diag({-4}));
  x.set_framing(0, ExtInt::unknown());
  CHECK(kind_of([&] { boundary_h1_order(x); }) == ErrorKind::UnknownEntries);
}

TEST_CASE("slides preserve determinant, signature and SNF") {
  Rng rng(45);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_symmetric(rng, 8, 4);
    auto x = from_linking(a);
    for (long long s = uniform(rng, 1, 50); s > 0; --s) {
      const auto i = uniform(rng, 0, 7);
      auto j = uniform(rng, 0, 6);
      if (j >= i) ++j;
      x = handle_slide(x, x.two_handle_labels()[i], x.two_handle_labels()[j], uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus);
    }
    const IntMatrix b = known_linking(x);
    CHECK(determinant(b) == determinant(a));
    CHECK(signature(b) == signature(a));
    CHECK(smith_normal_form(b).diagonal() == smith_normal_form(a).diagonal());
  }
}

TEST_CASE("labels") {
  auto x = from_linking(diag({-1, -1, -1}));
  x.remove_two_handle(1);
  CHECK(x.fresh_two_label() == "k2");
  CHECK(x.fresh_one_label() == "d1");
  CHECK(kind_of([&] { x.index_of_two("nope"); }) == ErrorKind::MissingLabel);
  CHECK(kind_of([&] { x.add_one_handle("k1"); }) == ErrorKind::DuplicateLabel);
}

TEST_CASE("decomposition file round trip") {
  auto x = with_dotted(2, -1);
  x.set_linking(0, 1, ExtInt::unknown());
  x = add_three_handles(x, 2);
  const std::string text = write_decomposition(x);
  CHECK(read_decomposition(text).identical(x));
  CHECK(text.find("\"?\"") != std::string::npos);

  auto big = from_linking(diag({-1}));
  big.set_framing(0, Integer("-99999999999999999999999"));
  CHECK(read_decomposition(write_decomposition(big)).identical(big));

  CHECK_THROWS_AS(read_decomposition("{"), Error);
  CHECK_THROWS_AS(read_decomposition(R"({"h0":1})"), Error);
  const std::string extra = R"({"h0":1,"one_handles":[],"two_handles":[],"linking":[],"incidence":[],"h3":0,"h4":0,"x":1})";
  CHECK_THROWS_AS(read_decomposition(extra), Error);
}
