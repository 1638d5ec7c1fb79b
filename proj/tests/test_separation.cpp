#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omsep/construct.hpp"
#include "omsep/separation.hpp"
#include "oracles.hpp"

using namespace omsep;
using oracle::set_of;

TEST_CASE("pair separation matches the definition") {
  for (auto m : {alternating(5, 2), alternating(5, 3), from_vectors(pentagon_with_centre())}) {
    const auto sc = m.signed_circuits();
    for (Bits i = 0; i <= m.ground(); ++i)
      for (Bits j = 0; j <= m.ground(); ++j) CHECK(is_pair_separated(m, i, j) == oracle::separated(sc, i, j));
  }
}

TEST_CASE("rank-2 alternating separation is strong separation") {
  // For C^{n,2}, separation means no a < b < c with a, c in I - J and b in J - I
  // or the reverse.
  const int n = 5;
  const auto m = alternating(n, 2);
  auto strong = [&](Bits i, Bits j) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          const Bits x = i & ~j, y = j & ~i;
          if (contains(x, a) && contains(y, b) && contains(x, c)) return false;
          if (contains(y, a) && contains(x, b) && contains(y, c)) return false;
        }
    return true;
  };
  for (Bits i = 0; i < 32; ++i)
    for (Bits j = 0; j < 32; ++j) CHECK(is_pair_separated(m, i, j) == strong(i, j));
}

TEST_CASE("sigma of a collection") {
  const auto m = alternating(3, 2);
  // Circuit (13, 2): {1,3} orients it positively, {2} negatively.
  auto r = sigma_of(m, make_collection({set_of({1, 3}), set_of({2})}));
  CHECK(!r.separated);
  CHECK(r.clash.has_value());
  r = sigma_of(m, make_collection({0, set_of({1}), set_of({1, 3})}));
  CHECK(r.separated);
  CHECK(r.sigma[0] == Sign::Plus);
  CHECK(is_complete(m, make_collection({set_of({1, 3})})));
  CHECK(!is_complete(m, make_collection({set_of({1})})));
}

TEST_CASE("corank-2 cycles of C^{n,n-2}") {
  const auto m = alternating(5, 3);
  const auto c = corank2_cycle(m, m.ground());
  CHECK(c.m() == 5);
  const auto seq = corank2_circuit_cycle(m, m.ground());
  CHECK(seq.size() == 10);
  for (std::size_t k = 0; k < 5; ++k) CHECK(seq[k + 5] == -seq[k]);
  CHECK_THROWS_AS(corank2_cycle(m, set_of({1, 2, 3})), NotCorank2);
}

TEST_CASE("Las Vergnas types") {
  using S = Sign;
  CHECK(classify_sequence({S::Plus, S::Plus, S::Minus, S::Minus}) == LVType::III);
  CHECK(classify_sequence({S::Plus, S::Minus, S::Minus, S::Plus}) == LVType::III);
  CHECK(classify_sequence({S::Plus, S::Minus, S::Plus, S::Minus, S::Plus, S::Minus}) != LVType::III);
  CHECK(classify_sequence({S::Zero, S::Zero, S::Zero, S::Zero}) == LVType::I);
}

TEST_CASE("colocalizations and liftings") {
  const auto m = alternating(4, 2);
  const auto all = oracle::all_sign_maps(m, [&](const SignMap& s) { return is_colocalization_gp(m, s); });
  CHECK(all.size() == 8);
  for (const auto& s : all) {
    CHECK(oracle::colocalization_brute(m, s));
    const auto lift = lifting_circuits(m, s);
    CHECK(validate_axioms(lift.signed_circuits()).ok());
    CHECK(lift.rank() == m.rank() + 1);
    CHECK(contract_element(lift, m.size()) == m);
    const auto coll = collection_of(m, s);
    CHECK(coll.size() == 11);
    CHECK(sigma_of(m, coll).sigma == s);
  }
}

TEST_CASE("deletion and contraction of collections") {
  const auto m = alternating(5, 2);
  const Collection s = make_collection({0, 0b1, 0b11, 0b111, 0b110, 0b100});
  for (int e = 0; e < 5; ++e)
    CHECK(s.size() == collection_delete(s, e).size() + collection_contract(s, e).size());
  CHECK(collection_delete(s, 0) == make_collection({0, 0b1, 0b11, 0b10}));
}

TEST_CASE("epsilon profiles") {
  using S = Sign;
  CHECK(epsilon_condition({S::Plus, S::Zero, S::Minus}));
  CHECK(!epsilon_condition({S::Plus, S::Minus, S::Zero}));
  CHECK(!epsilon_condition({S::Plus, S::Zero, S::Plus}));
  CHECK(epsilon_condition({S::Zero, S::Zero, S::Zero}));
}

TEST_CASE("padding") {
  CHECK(pad(0b01, 2) == 0b1001);
  CHECK(popcount(pad(0b101, 3)) == 3);
  const auto p = pad_collection(make_collection({0, 0b1}), 2);
  CHECK(p.size() == 2);
}
