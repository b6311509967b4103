#include <yb/harness/generate.hpp>
#include <yb/yb.hpp>

#include <gtest/gtest.h>

using namespace yb;
using namespace yb::maps;

namespace {

using Q = Rational;
using QM = SquareMatrix<Q>;
using P = ProjectivePoint<Q>;
using Pair = RankOnePair<Q>;
using CV = CrystalVector<Q>;

Q q(long p, long d = 1) { return scalar<Q>(p, d); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Config;
}

}  // namespace

// --- Adler ---

TEST(Adler, WorkedInstance) {
    auto [xt, yt] = adler_apply(q(3), q(1), P::affine(q(1)), P::affine(q(2)));
    EXPECT_EQ(xt.affine_value(), q(4, 3));
    EXPECT_EQ(yt.affine_value(), q(5, 3));
}

TEST(Adler, EqualParametersFlip) {
    auto [xt, yt] = adler_apply(q(7, 2), q(7, 2), P::affine(q(-3)), P::affine(q(8, 5)));
    EXPECT_EQ(xt.affine_value(), q(8, 5));
    EXPECT_EQ(yt.affine_value(), q(-3));
}

TEST(Adler, PoleIsSingularInput) {
    EXPECT_EQ(kind_of([] { adler_apply(q(3), q(1), P::affine(q(1)), P::affine(q(-1))); }), ErrorKind::SingularInput);
}

TEST(Adler, InfinityByHomogeneousForm) {
    auto [xt, yt] = adler_apply(q(3), q(1), P::infinity(), P::affine(q(2)));
    EXPECT_EQ(xt.affine_value(), q(2));
    EXPECT_TRUE(yt.is_infinite());
    EXPECT_EQ(kind_of([] { adler_lax(P::infinity(), q(1), q(0)); }), ErrorKind::Unsupported);
}

TEST(Adler, LaxExamples) {
    EXPECT_EQ(adler_lax(q(0), q(3), q(1)), (QM{{q(0), q(2)}, {q(1), q(0)}}));
    const auto degenerate = adler_lax(q(1), q(3), q(3));
    EXPECT_EQ(degenerate, (QM{{q(1), q(1)}, {q(1), q(1)}}));
    EXPECT_FALSE(degenerate.is_invertible());
    EXPECT_EQ(mobius_apply(adler_lax(q(1), q(3), q(1)), P::affine(q(2))).affine_value(), q(5, 3));
}

TEST(Adler, SumPreservedAndMobiusForm) {
    AdlerMap<Q> map;
    auto rng = harness::trial_rng(21, 0);
    for (int t = 0; t < 300; ++t) {
        const auto in = harness::generate_instance(map, rng, 2);
        const auto& [l, m, n] = in.params;
        const auto& [x, y, z] = in.fields;
        auto [xt, yt] = adler_apply(l, m, x, y);
        EXPECT_EQ(xt.affine_value() + yt.affine_value(), x.affine_value() + y.affine_value());
        EXPECT_TRUE(adler_mobius_form_check(l, m, x, y, 0.0).ok());
    }
}

// --- soliton ---

TEST(Soliton, WorkedInstance) {
    const Pair p1({q(1), q(0)}, {q(1), q(0)});
    const Pair p2({q(1), q(1)}, {q(0), q(1)});
    auto [o1, o2] = soliton_apply(q(2), q(1), p1, p2);
    EXPECT_EQ(o1.xi(), (Vector<Q>{q(1), q(0)}));
    EXPECT_EQ(o1.eta(), (Vector<Q>{q(1), q(2)}));
    EXPECT_EQ(o2.xi(), (Vector<Q>{q(-3), q(1)}));
    EXPECT_EQ(o2.eta(), (Vector<Q>{q(0), q(1)}));
}

TEST(Soliton, DimensionOneIsTrivial) {
    const Pair p1({q(3)}, {q(2)});
    const Pair p2({q(-5)}, {q(7, 3)});
    auto [o1, o2] = soliton_apply(q(4), q(-1, 2), p1, p2);
    EXPECT_EQ(o1.projector(), QM::identity(1));
    EXPECT_EQ(o2.projector(), QM::identity(1));
}

TEST(Soliton, Errors) {
    const Pair p({q(1), q(0)}, {q(1), q(0)});
    EXPECT_EQ(kind_of([&] { soliton_apply(q(1), q(1), p, p); }), ErrorKind::SingularInput);
    EXPECT_EQ(kind_of([] { Pair({q(1), q(0)}, {q(0), q(1)}); }), ErrorKind::InvalidState);
    EXPECT_EQ(kind_of([&] { soliton_lax(p, q(2), q(2)); }), ErrorKind::SpectralSingularity);
}

TEST(Soliton, LaxExamples) {
    const Pair p({q(1), q(0)}, {q(1), q(0)});
    EXPECT_EQ(soliton_lax(p, q(1), q(3)), (QM{{q(2), q(0)}, {q(0), q(1)}}));
    const Pair r({q(2), q(-1)}, {q(3), q(5)});
    EXPECT_EQ(soliton_lax(r, q(0), q(9, 4)), QM::identity(2));
    EXPECT_EQ(soliton_lax(r, q(1), q(3)).determinant(), q(2));
}

TEST(Soliton, OutputProjectors) {
    SolitonMap<Q> map;
    for (std::size_t dim : {2u, 3u}) {
        auto rng = harness::trial_rng(22, dim);
        for (int t = 0; t < 200; ++t) {
            const auto in = harness::generate_instance(map, rng, dim);
            const auto& [l, m, n] = in.params;
            const auto& [x, y, z] = in.fields;
            auto [o1, o2] = soliton_apply(l, m, x, y);
            auto [s1, s2] = soliton_apply_scaled(l, m, x, y);
            for (const auto& o : {o1, o2}) {
                const auto pr = o.projector();
                EXPECT_EQ(pr * pr, pr);
                EXPECT_EQ(pr.trace(), q(1));
            }
            EXPECT_EQ(s1.projector(), o1.projector());
            EXPECT_EQ(s2.projector(), o2.projector());
            EXPECT_EQ(canonical(o1).projector(), o1.projector());
        }
    }
}

// --- crystal ---

TEST(Crystal, PValues) {
    EXPECT_EQ(crystal_P(1, CV{q(4)}, CV{q(9)}), q(1));
    const CV x{q(1), q(2)};
    EXPECT_EQ(crystal_P(1, x, CV{q(3), q(5)}), q(5));
    EXPECT_EQ(crystal_P(2, x, CV{q(3), q(5)}), q(6));
    EXPECT_EQ(crystal_P(1, x, CV{q(3), q(4)}), q(5));
    EXPECT_EQ(crystal_P(2, x, CV{q(3), q(4)}), q(5));
}

TEST(Crystal, WorkedImages) {
    const CV x{q(1), q(2)};
    auto [xt, yt] = crystal_apply(q(2), q(15), x, CV{q(3), q(5)});
    EXPECT_EQ(xt[0], q(5, 6));
    EXPECT_EQ(xt[1], q(12, 5));
    EXPECT_EQ(yt[0], q(18, 5));
    EXPECT_EQ(yt[1], q(25, 6));
    auto [xs, ys] = crystal_apply(q(2), q(12), x, CV{q(3), q(4)});
    EXPECT_EQ(field_residual(xs, x), 0);
    EXPECT_EQ(field_residual(ys, CV{q(3), q(4)}), 0);
}

TEST(Crystal, DimensionOne) {
    auto [xt, yt] = crystal_apply(q(-7, 3), q(5), CV{q(-7, 3)}, CV{q(5)});
    EXPECT_EQ(xt[0], q(-7, 3));
    EXPECT_EQ(yt[0], q(5));
    auto [z, w] = crystal_embed(CV{q(2)}, CV{q(3)});
    EXPECT_EQ(z.size(), 1u);
    EXPECT_EQ(w.size(), 1u);
    EXPECT_TRUE(crystal_projective_form_check(q(2), q(3), CV{q(2)}, CV{q(3)}, 0.0).ok());
}

TEST(Crystal, Errors) {
    EXPECT_EQ(kind_of([] { crystal_apply(q(3), q(15), CV{q(1), q(2)}, CV{q(3), q(5)}); }), ErrorKind::InvalidState);
    // P_1 = x_2 + y_1 = 0
    EXPECT_EQ(kind_of([] { crystal_apply(q(2), q(2), CV{q(1), q(2)}, CV{q(-2), q(-1)}); }), ErrorKind::SingularInput);
    EXPECT_EQ(kind_of([] { CV{q(1), q(0)}; }), ErrorKind::InvalidState);
}

TEST(Crystal, Embedding) {
    auto [z, w] = crystal_embed(CV{q(1), q(2)}, CV{q(3), q(5)});
    EXPECT_EQ(z.normalized(), (Vector<Q>{q(1), q(1)}));
    EXPECT_EQ(projective_residual(w, P({q(5), q(1)})), 0);
    auto [z3, w3] = crystal_embed(CV{q(2), q(3), q(5)}, CV{q(7), q(11), q(13)});
    EXPECT_EQ(Vector<Q>(z3.coords().begin(), z3.coords().end()), (Vector<Q>{q(1), q(2), q(6)}));
    EXPECT_EQ(Vector<Q>(w3.coords().begin(), w3.coords().end()), (Vector<Q>{q(143), q(13), q(1)}));
}

TEST(Crystal, LaxInverseMatrices) {
    const auto b = crystal_lax_B_inv(CV{q(3), q(5)}, q(2));
    EXPECT_EQ(b, (QM{{q(3), q(-1)}, {q(-2), q(5)}}));
    EXPECT_EQ(b.determinant(), q(13));
    const auto a = crystal_lax_A_inv(CV{q(1), q(2)}, q(15));
    EXPECT_EQ(a, (QM{{q(1), q(-15)}, {q(-1), q(2)}}));
    EXPECT_EQ(a.determinant(), q(-13));
}

TEST(Crystal, TransposeIdentityAndOwnParameter) {
    CrystalMap<Q> map;
    auto rng = harness::trial_rng(23, 0);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 30; ++t) {
            const auto v = harness::draw_field<CrystalMap<Q>>(rng, n);
            const Q c = harness::draw_scalar<Q>(rng);
            EXPECT_EQ(crystal_lax_B_inv(v, c).transpose(), crystal_lax_A_inv(v, c));
            const Q zeta = harness::draw_scalar<Q>(rng);
            if (!crystal_lax_A_inv(v, zeta).is_invertible()) continue;
            EXPECT_EQ(map.lax_a(v, q(1), zeta), map.lax_a(v, q(-17, 3), zeta));
            EXPECT_EQ(map.lax_b(v, q(1), zeta), map.lax_b(v, q(-17, 3), zeta));
        }
}

TEST(Crystal, ProjectiveFormWorkedInstance) {
    const CV x{q(1), q(2)}, y{q(3), q(5)};
    auto [z, w] = crystal_embed(x, y);
    const auto zi = projective_apply(crystal_lax_B_inv(y, q(2)).inverse(), z);
    const auto wi = projective_apply(crystal_lax_A_inv(x, q(15)).inverse(), w);
    EXPECT_EQ(projective_residual(zi, P({q(6), q(5)})), 0);
    EXPECT_EQ(projective_residual(wi, P({q(25), q(6)})), 0);
    EXPECT_TRUE(crystal_projective_form_check(q(2), q(15), x, y, 0.0).ok());
}

TEST(Crystal, StructuralInvariants) {
    CrystalMap<Q> map;
    for (std::size_t n = 2; n <= 4; ++n) {
        auto rng = harness::trial_rng(24, n);
        for (int t = 0; t < 100; ++t) {
            const auto in = harness::generate_instance(map, rng, n);
            const auto& [l, m, k] = in.params;
            const auto& [x, y, z] = in.fields;
            auto [xt, yt] = crystal_apply(l, m, x, y);
            for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(xt[j] * yt[j], x[j] * y[j]);
            EXPECT_EQ(xt.product(), l);
            EXPECT_EQ(yt.product(), m);
        }
    }
}

TEST(Crystal, FloatLabelTolerance) {
    using C = Complex;
    const CrystalVector<C> x{C(1.0 / 3.0), C(3.0)};
    const CrystalVector<C> y{C(0.1), C(7.0)};
    EXPECT_NO_THROW(crystal_apply(C(1.0), C(0.7), x, y));
    EXPECT_THROW(crystal_apply(C(1.001), C(0.7), x, y), Error);
}
