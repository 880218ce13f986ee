#include <doctest.h>

#include <map>
#include <set>

#include "subcode/gabidulin.hpp"
#include "subcode/geometry.hpp"
#include "support.hpp"

using namespace subcode;

namespace {

// Rank of f by counting its kernel, with the oracle's field arithmetic on
// coordinates of the basis images.
int oracle_rank(const CubicExtension& ext, const LinPoly& f) {
  int kernel = 0;
  for (int x = 0; x < ext.order(); ++x) kernel += evaluate(ext, f, static_cast<Fq3>(x)) == 0;
  return 3 - oracle::log_q(static_cast<std::size_t>(kernel), ext.q());
}

}  // namespace

TEST_CASE("codeword enumeration") {
  for (int q : {2, 3}) {
    const CubicExtension& ext = CubicExtension::get(q);
    const auto words = codewords(ext);
    CHECK(words.size() == static_cast<std::size_t>(ext.order()) * ext.order());
    CHECK(std::set<LinPoly>(words.begin(), words.end()).size() == words.size());
    CHECK(words.front() == LinPoly{0, 0});
  }
  CHECK(codewords(CubicExtension::get(2)).size() == 64);
  CHECK(codewords(CubicExtension::get(3)).size() == 729);
}

TEST_CASE("evaluation is GF(q)-linear and matrices follow the row convention") {
  auto g = oracle::rng(30);
  for (int q : {2, 3, 4, 5}) {
    const CubicExtension& ext = CubicExtension::get(q);
    std::uniform_int_distribution<int> d(0, ext.order() - 1), s(0, q - 1);
    for (int i = 0; i < 50; ++i) {
      const LinPoly f{static_cast<Fq3>(d(g)), static_cast<Fq3>(d(g))};
      const Fq3 x = d(g), y = d(g);
      const Fq l = s(g);
      CHECK(evaluate(ext, f, ext.add(ext.scale(l, x), y)) ==
            ext.add(ext.scale(l, evaluate(ext, f, x)), evaluate(ext, f, y)));
      const Matrix m = matrix_of(ext, f);
      Matrix cx(ext.base(), 0, 3);
      cx.append_row(ext.coords(x));
      const Matrix img = cx * m;
      CHECK(ext.from_coords(img.row(0)) == evaluate(ext, f, x));
    }
  }
}

TEST_CASE("rank examples") {
  const CubicExtension& ext = CubicExtension::get(2);
  CHECK(rank_of(ext, {0, 0}) == 0);
  // x^2 - x has kernel GF(2)
  const LinPoly h{ext.neg(1), 1};
  CHECK(rank_of(ext, h) == 2);
  CHECK(evaluate(ext, h, 1) == 0);
  CHECK(rank_of(ext, {ext.generator_root(), 0}) == 3);
}

TEST_CASE("norm criterion agrees with kernel counting") {
  for (int q : {2, 3, 4}) {
    const CubicExtension& ext = CubicExtension::get(q);
    for_each_codeword(ext, [&](const LinPoly& f) {
      const int r = oracle_rank(ext, f);
      CHECK(rank_by_norm(ext, f) == r);
      CHECK(rank(matrix_of(ext, f)) == r);
      CHECK(r != 1);
    });
  }
}

TEST_CASE("rank distribution matches the closed form") {
  CHECK(rank_distribution_formula(2) == std::array<std::uint64_t, 4>{1, 0, 49, 14});
  CHECK(rank_distribution_formula(3) == std::array<std::uint64_t, 4>{1, 0, 338, 390});
  for (int q : {2, 3, 4}) {
    const auto d = rank_distribution(CubicExtension::get(q));
    CHECK(d == rank_distribution_formula(q));
    const std::uint64_t Q = static_cast<std::uint64_t>(q);
    CHECK(d[0] + d[1] + d[2] + d[3] == Q * Q * Q * Q * Q * Q);
  }
}

TEST_CASE("restriction to a full-rank Z is a bijection") {
  const CubicExtension& ext = CubicExtension::get(2);
  int count = 0;
  for_each_canonical_matrix(ext.base(), 2, 3, [&](const Matrix& z) {
    const auto w = mrd_restriction(ext, z);
    CHECK(w.image_size == 64);
    CHECK(w.injective);
    CHECK(w.surjective);
    ++count;
  });
  CHECK(count == 7);
  const auto id = mrd_restriction(ext, Matrix::identity(ext.base(), 3));
  CHECK(id.injective);
  CHECK_FALSE(id.surjective);
  const CubicExtension& e3 = CubicExtension::get(3);
  CHECK(mrd_restriction(e3, Matrix::from_rows(e3.base(), 3, {{1, 0, 2}, {0, 1, 1}})).image_size == 729);
  CHECK_THROWS_AS(mrd_restriction(ext, Matrix::from_rows(ext.base(), 3, {{1, 0, 0}, {1, 0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("D(<1,beta>, <beta+beta^2>) consists of the maps u x^2 - u^2 x, u in Z") {
  const CubicExtension& ext = CubicExtension::get(2);
  const Fq3 beta = ext.generator_root();
  const Fq3 c = ext.add(beta, ext.pow(beta, 2));
  const ConstantRankSpace d = d_space(ext, 1, beta, c);
  std::set<LinPoly> nonzero;
  for (const auto& m : d.members())
    if (!(m == LinPoly{0, 0})) nonzero.insert(m);
  std::set<LinPoly> expected;
  for (Fq3 u : {Fq3{1}, beta, ext.add(1, beta)}) expected.insert(removable_member(ext, u));
  CHECK(nonzero == expected);
  CHECK(corr(ext, 1, beta) == element_span(ext, {c}));
}

TEST_CASE("constant rank spaces") {
  auto g = oracle::rng(31);
  for (int q : {2, 3, 4}) {
    const CubicExtension& ext = CubicExtension::get(q);
    std::uniform_int_distribution<int> dist(1, ext.order() - 1);
    for (int i = 0; i < 20; ++i) {
      const Fq3 a = dist(g), b = dist(g), c = dist(g);
      if (element_span(ext, {a, b}).dim() != 2) {
        CHECK_THROWS_AS(d_space(ext, a, b, c), std::invalid_argument);
        continue;
      }
      const ConstantRankSpace d = d_space(ext, a, b, c);
      CHECK(evaluate(ext, d.f, a) == 0);
      CHECK(evaluate(ext, d.g, b) == 0);
      CHECK(evaluate(ext, d.f, b) == c);
      CHECK(evaluate(ext, d.g, a) == c);
      const auto members = d.members();
      CHECK(std::set<LinPoly>(members.begin(), members.end()).size() == static_cast<std::size_t>(q * q));
      std::set<Subspace> kernels;
      Matrix zm(ext.base(), 0, 3);
      zm.append_row(ext.coords(a));
      zm.append_row(ext.coords(b));
      for (const auto& m : members) {
        if (m == LinPoly{0, 0}) continue;
        CHECK(oracle_rank(ext, m) == 2);
        const Subspace k = left_kernel(matrix_of(ext, m));
        CHECK(k.dim() == 1);
        CHECK(d.z.contains(k));
        kernels.insert(k);
        CHECK(Subspace::span(zm * matrix_of(ext, m)) == d.p);
      }
      CHECK(kernels.size() == static_cast<std::size_t>(q + 1));
    }
    CHECK_THROWS_AS(d_space(ext, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(d_space(ext, 1, ext.generator_root(), 0), std::invalid_argument);
  }
}

TEST_CASE("fibres of A -> ZA over a point have q^2 members forming D(Z,P)-cosets") {
  const CubicExtension& ext = CubicExtension::get(2);
  const auto words = codewords(ext);
  for_each_canonical_matrix(ext.base(), 2, 3, [&](const Matrix& z) {
    const Fq3 a = ext.from_coords(z.row(0)), b = ext.from_coords(z.row(1));
    for (int c = 1; c < ext.order(); ++c) {
      const Subspace p = element_span(ext, {static_cast<Fq3>(c)});
      if (ext.from_coords(p.cm().row(0)) != c) continue;
      std::vector<LinPoly> fibre;
      for (const auto& w : words)
        if (Subspace::span(z * matrix_of(ext, w)) == p) fibre.push_back(w);
      const auto d = d_space(ext, a, b, static_cast<Fq3>(c)).members();
      const std::set<LinPoly> dset(d.begin(), d.end());
      std::set<LinPoly> nonzero_d;
      for (const auto& m : dset)
        if (!(m == LinPoly{0, 0})) nonzero_d.insert(m);
      CHECK(std::set<LinPoly>(fibre.begin(), fibre.end()) == nonzero_d);
    }
  });
}

TEST_CASE("removable set") {
  for (int q : {2, 3}) {
    const CubicExtension& ext = CubicExtension::get(q);
    const auto r = removable_set(ext);
    const std::set<LinPoly> rs(r.begin(), r.end());
    CHECK(rs.size() == static_cast<std::size_t>(ext.order()));
    for (const auto& f : r) {
      CHECK(rank_of(ext, f) == (f == LinPoly{0, 0} ? 0 : 2));
      for (const auto& h : r) CHECK(rs.count(add(ext, f, h)));
      for (int s = 0; s < q; ++s) CHECK(rs.count(scale(ext, static_cast<Fq>(s), f)));
    }
    auto g = oracle::rng(32);
    std::uniform_int_distribution<int> dist(1, ext.order() - 1);
    int tried = 0;
    while (tried < 20) {
      const Fq3 a = dist(g), b = dist(g);
      if (element_span(ext, {a, b}).dim() != 2) continue;
      ++tried;
      const Subspace p = corr(ext, a, b);
      for (const auto& m : d_space(ext, a, b, ext.from_coords(p.cm().row(0))).members()) CHECK(rs.count(m));
    }
  }
  CHECK(removable_set(CubicExtension::get(2)).size() == 8);
}

TEST_CASE("corr is well defined and bijective") {
  for (int q : kSupportedOrders) {
    const CubicExtension& ext = CubicExtension::get(q);
    const auto lines = subspaces_of(Subspace::full(ext.base(), 3), 2);
    std::set<Subspace> images;
    for (const auto& z : lines) {
      const Subspace p = corr(ext, z);
      CHECK(p.dim() == 1);
      images.insert(p);
      // Any basis of z gives the same point.
      const auto elems = elements_of(ext, z);
      for (Fq3 a : elems)
        for (Fq3 b : elems)
          if (element_span(ext, {a, b}).dim() == 2) CHECK(corr(ext, a, b) == p);
    }
    CHECK(images.size() == lines.size());
    CHECK(images.size() == gaussian(3, 1, q));
  }
}

TEST_CASE("triple determinant check agrees with spanning, all triples at q=2") {
  const CubicExtension& ext = CubicExtension::get(2);
  int agree = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        const bool spans = element_span(ext, {static_cast<Fq3>(a), static_cast<Fq3>(b), static_cast<Fq3>(c)}).dim() == 3;
        agree += triple_determinant_check(ext, a, b, c) == spans;
      }
  CHECK(agree == 512);
  const CubicExtension& e3 = CubicExtension::get(3);
  CHECK(triple_determinant_check(e3, e3.basis()[0], e3.basis()[1], e3.basis()[2]));
  CHECK_FALSE(triple_determinant_check(e3, 1, e3.generator_root(), e3.add(1, e3.generator_root())));
}

TEST_CASE("removable set satisfies the rearrangement conditions") {
  for (int q : {2, 3}) {
    const auto chk = check_removable_set(CubicExtension::get(q));
    CHECK(chk.contains_d_spaces);
    CHECK(chk.corr_bijective);
    CHECK(chk.stacked_rank);
    CHECK(chk.pairs_checked > 0);
  }
}
