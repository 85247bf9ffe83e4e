#include "cr/fixtures.hpp"
#include "cr/kernel.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("kernel") {

TEST_CASE("graded profile of Q") {
    ModelSurface q = cubic_q();
    LinearizedOperator op(q, shape_q(), q.ws);
    GradedProfile p = graded_profile(op, -3, 3);
    CHECK(p.dims == std::map<int, int>{{-3, 1}, {-2, 2}, {-1, 5}, {0, 5}, {1, 3}, {2, 0}, {3, 0}});
    CHECK(p.total() == 16);
    CHECK(p.stabilized);
    for (const auto& [mu, jets] : graded_kernel_bases(op, -3, 1))
        for (const auto& X : jets) CHECK(tangency_residual(q, X).is_zero());
}

TEST_CASE("window kernels of the three-nondegenerate normal form") {
    for (auto seed : kDefaultSeeds) {
        Fixture f = make_fixture("j6-generic", seed);
        Space sp = make_space(f, "V5");
        LinearizedOperator op(f.surface, sp.shape, sp.ws);
        BoundResult b = param_bound(op, sp.window);
        CHECK(b.window_kernel_dim == 0);
        CHECK(b.rank + b.kernel_dim == b.cols);
    }
    Fixture z = make_fixture("j6-zero");
    Space full = make_space(z, "full");
    LinearizedOperator op(z.surface, full.shape, full.ws);
    CHECK(param_bound(op, full.window).window_kernel_dim == 1);
}

TEST_CASE("kernel vectors solve the window equations") {
    Fixture f = make_fixture("pair9-special");
    Space sp = make_space(f, "V5tilde");
    LinearizedOperator op(f.surface, sp.shape, sp.ws);
    LinearOperatorMatrix m = assemble(op, sp.window);
    KernelBasis k = kernel_basis(m);
    CHECK(static_cast<int>(k.jets.size()) == window_kernel(m).kernel_dim);
    for (std::size_t i = 0; i < k.jets.size(); ++i) {
        CHECK(verify_solution(op, k.jets[i], sp.window));
        CHECK(vector_from_jet(m, k.jets[i]) == k.vectors[i]);
    }
}

TEST_CASE("matrix export format") {
    Fixture f = make_fixture("quadric-c2");
    Space sp = make_space(f, "graded");
    LinearizedOperator op(f.surface, sp.shape, sp.ws);
    LinearOperatorMatrix m = assemble(op, {0, 0, 1, std::nullopt});
    std::string text = export_matrix(m);
    CHECK(text.rfind("# surface quadric-c2\n", 0) == 0);
    CHECK(text.find("# size 4 6 ") != std::string::npos);
    CHECK(export_matrix(assemble(op, {0, 0, 1, std::nullopt})) == text);
}

TEST_CASE("depth checks") {
    Fixture f = make_fixture("j6-generic");
    Space sp = make_space(f, "V5");
    LinearizedOperator op(f.surface, sp.shape, sp.ws);
    CHECK_NOTHROW(op.check_depth(3));
    CHECK_THROWS(op.check_depth(40));
}

}
