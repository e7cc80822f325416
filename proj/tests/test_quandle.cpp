#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qtlink/errors.hpp"
#include "qtlink/quandle.hpp"
#include "test_util.hpp"

using namespace qtlink;

namespace {

// Independent oracle: quasi-triviality via the inner group rather than
// orbits.  x * phi(x) == x for every inner automorphism phi.
bool qt_by_inner_group(const FiniteQuandle& q) {
  const InnerGroup inn = inner_group(q);
  REQUIRE(!inn.truncated);
  for (int x = 0; x < q.size(); ++x)
    for (const Perm& phi : inn.elements)
      if (q.op(x, phi(x)) != x) return false;
  return true;
}

FiniteQuandle load_inoue12() {
  return parse_quandle(read_data_file("inoue12.quandle"));
}

}  // namespace

TEST_CASE("trivial quandle ops") {
  const FiniteQuandle q = trivial_quandle(3);
  CHECK(q.size() == 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(q.op(x, y) == x);
      CHECK(q.inv_op(x, y) == x);
    }
}

TEST_CASE("dihedral quandle ops") {
  const FiniteQuandle q = dihedral_quandle(3);
  CHECK(q.op(0, 1) == 2);
  CHECK(q.op(1, 0) == 2);
  CHECK(q.op(2, 2) == 2);
  // Involutory: inv_op coincides with op.
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(q.inv_op(x, y) == q.op(x, y));
  CHECK_THROWS_AS(dihedral_quandle(0), RangeError);
}

TEST_CASE("from_table rejects bad shapes and entries") {
  CHECK_THROWS_AS(FiniteQuandle::from_table({}), RangeError);
  CHECK_THROWS_AS(FiniteQuandle::from_table({{0, 0}}), RangeError);
  CHECK_THROWS_AS(FiniteQuandle::from_table({{0, 2}, {1, 1}}), RangeError);
  CHECK_THROWS_AS(FiniteQuandle::from_table({{0, -1}, {1, 1}}), RangeError);
}

TEST_CASE("axiom violations carry the first witness in scan order") {
  SUBCASE("idempotence") {
    try {
      FiniteQuandle::from_table({{1, 0}, {1, 1}});
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom == "Q1");
      CHECK(e.witness == std::vector<int>{0});
    }
  }
  SUBCASE("column bijectivity") {
    // Column 1 reads (0, 1): fine.  Column 0 reads (0, 0): 0 repeats.
    try {
      FiniteQuandle::from_table({{0, 0}, {0, 1}});
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom == "Q2");
      CHECK(e.witness == std::vector<int>{0, 1, 0});
    }
  }
  SUBCASE("self-distributivity") {
    // Columns are permutations ((12), (23), id, id) but Q3 fails.
    try {
      FiniteQuandle::from_table(
          {{0, 0, 0, 0}, {2, 1, 1, 1}, {1, 3, 2, 2}, {3, 2, 3, 3}});
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom == "Q3");
      CHECK(e.witness == std::vector<int>{1, 0, 1});
    }
  }
}

TEST_CASE("inv_op inverts op") {
  for (const FiniteQuandle& q :
       {dihedral_quandle(5), load_inoue12(), trivial_quandle(4)}) {
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) {
        CHECK(q.inv_op(q.op(x, y), y) == x);
        CHECK(q.op(q.inv_op(x, y), y) == x);
      }
  }
}

TEST_CASE("right translations") {
  const FiniteQuandle q = load_inoue12();
  const Perm s = q.right_translation(0);
  CHECK(s.images == std::vector<int>{0, 1, 2, 3, 6, 7, 4, 5, 9, 8, 11, 10});
  CHECK(s.then(s).is_identity());
  CHECK_THROWS_AS(q.right_translation(12), RangeError);
  CHECK_THROWS_AS(q.right_translation(-1), RangeError);
}

TEST_CASE("permutation helpers") {
  const Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  const Perm p{{1, 2, 0, 3}};
  CHECK(p(0) == 1);
  CHECK(p.inverse().images == std::vector<int>{2, 0, 1, 3});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.inverse().then(p).is_identity());
  CHECK(p.degree() == 4);
  CHECK(!(p == id));
}

TEST_CASE("orbit decomposition") {
  SUBCASE("dihedral with even order splits") {
    const OrbitPartition parts = orbits(dihedral_quandle(4));
    CHECK(parts.count() == 2);
    CHECK(parts.orbit_members[0] == std::vector<int>{0, 2});
    CHECK(parts.orbit_members[1] == std::vector<int>{1, 3});
    CHECK(parts.orbit_id == std::vector<int>{0, 1, 0, 1});
  }
  SUBCASE("dihedral with odd order is connected") {
    CHECK(orbits(dihedral_quandle(5)).count() == 1);
  }
  SUBCASE("twelve element quandle has three orbits of four") {
    const OrbitPartition parts = orbits(load_inoue12());
    REQUIRE(parts.count() == 3);
    CHECK(parts.orbit_members[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(parts.orbit_members[1] == std::vector<int>{4, 5, 6, 7});
    CHECK(parts.orbit_members[2] == std::vector<int>{8, 9, 10, 11});
  }
  SUBCASE("trivial quandle is totally disconnected") {
    CHECK(orbits(trivial_quandle(5)).count() == 5);
  }
}

TEST_CASE("inner group sizes") {
  CHECK(inner_group(trivial_quandle(7)).order() == 1);
  CHECK(inner_group(dihedral_quandle(3)).order() == 6);

  const InnerGroup inn = inner_group(load_inoue12());
  CHECK(inn.order() == 8);
  CHECK(!inn.truncated);
  // Every element is an involution and the group is abelian.
  for (const Perm& g : inn.elements) {
    CHECK(g.then(g).is_identity());
    for (const Perm& h : inn.elements) CHECK(g.then(h) == h.then(g));
  }
  CHECK(inn.generators.size() == 12);
}

TEST_CASE("inner group cap reports truncation") {
  const InnerGroup inn = inner_group(dihedral_quandle(5), 3);
  CHECK(inn.truncated);
  CHECK(inn.order() == 3);
}

TEST_CASE("quasi-triviality") {
  SUBCASE("positive cases") {
    for (const FiniteQuandle& q : {trivial_quandle(3), load_inoue12()}) {
      const QuasiTrivialityCheck chk = is_quasi_trivial(q);
      CHECK(chk.quasi_trivial);
      CHECK(!chk.witness.has_value());
      CHECK(qt_by_inner_group(q));
    }
  }
  SUBCASE("dihedral of odd order is not quasi-trivial") {
    const FiniteQuandle q = dihedral_quandle(3);
    const QuasiTrivialityCheck chk = is_quasi_trivial(q);
    CHECK(!chk.quasi_trivial);
    REQUIRE(chk.witness.has_value());
    // First failure in scan order: 0 * 1 = 2 with 1 in the orbit of 0.
    CHECK(chk.witness->first == 0);
    CHECK(chk.witness->second == 1);
    CHECK(!qt_by_inner_group(q));
  }
  SUBCASE("agrees with the inner group definition on small quandles") {
    for (int n = 1; n <= 6; ++n) {
      const FiniteQuandle q = dihedral_quandle(n);
      CHECK(is_quasi_trivial(q).quasi_trivial == qt_by_inner_group(q));
    }
  }
}

TEST_CASE("conjugation quandles") {
  SUBCASE("abelian groups give trivial quandles") {
    // Z4 under conjugation.
    std::vector<std::vector<int>> z4(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) z4[a][b] = (a + b) % 4;
    const FiniteQuandle q = conjugation_quandle(z4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(q.op(x, y) == x);
    CHECK(is_quasi_trivial(q).quasi_trivial);
  }
  SUBCASE("symmetric group on three letters") {
    // S3 with elements e,(12),(13),(23),(123),(132) indexed 0..5.
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const std::vector<int>& p) {
      return static_cast<int>(std::find(perms.begin(), perms.end(), p) -
                              perms.begin());
    };
    std::vector<std::vector<int>> s3(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::vector<int> ab(3);
        for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
        s3[a][b] = find(ab);
      }
    const FiniteQuandle q = conjugation_quandle(s3);
    const OrbitPartition parts = orbits(q);
    std::multiset<std::size_t> sizes;
    for (const auto& orb : parts.orbit_members) sizes.insert(orb.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
    CHECK(!is_quasi_trivial(q).quasi_trivial);
  }
  SUBCASE("rejects non-groups") {
    CHECK_THROWS_AS(conjugation_quandle({{0, 0}, {0, 0}}),
                    GroupAxiomViolation);
    CHECK_THROWS_AS(conjugation_quandle({{1, 0}, {0, 0}}),
                    GroupAxiomViolation);
  }
}

TEST_CASE("quandle parser") {
  SUBCASE("twelve element table with labels") {
    const FiniteQuandle q = load_inoue12();
    CHECK(q.size() == 12);
    CHECK(q.label(0) == "a1");
    CHECK(q.label(4) == "b1");
    CHECK(q.label(11) == "c4");
    CHECK(q.op(0, 4) == 1);
    CHECK(q.op(4, 0) == 6);
    CHECK(q.op(8, 4) == 10);
    // Rows are constant on orbit blocks of the second argument.
    const OrbitPartition parts = orbits(q);
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 12; ++y)
        CHECK(q.op(x, y) == q.op(x, parts.orbit_members[parts.orbit_id[y]][0]));
  }
  SUBCASE("comments and defaults") {
    const FiniteQuandle q = parse_quandle("# comment\n2\n0 0 # trailing\n1 1\n");
    CHECK(q.size() == 2);
    CHECK(q.label(0) == "0");
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_quandle(""), ParseError);
    CHECK_THROWS_AS(parse_quandle("2\n0 0\n1"), ParseError);
    CHECK_THROWS_AS(parse_quandle("2\n0 0\n1 1\njunk"), ParseError);
    CHECK_THROWS_AS(parse_quandle("1\nx"), ParseError);
    CHECK_THROWS_AS(parse_quandle("0\n"), ParseError);
    CHECK_THROWS_AS(parse_quandle("2\n0 0\n1 1\nlabel 5 z"), ParseError);
    CHECK_THROWS_AS(parse_quandle("1\n1\n"), RangeError);
  }
  SUBCASE("other data files parse and validate") {
    CHECK(parse_quandle(read_data_file("trivial1.quandle")).size() == 1);
    CHECK(parse_quandle(read_data_file("trivial2.quandle")).size() == 2);
    CHECK(parse_quandle(read_data_file("dihedral3.quandle")).size() == 3);
  }
}
