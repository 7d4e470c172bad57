#include "doctest.h"

#include "hecke/affsym.hpp"
#include "hecke/bessel.hpp"
#include "hecke/daha1.hpp"
#include "hecke/parallel.hpp"

#include <cstdlib>
#include <stdexcept>

using namespace hecke;

namespace {

struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { setenv("HECKE_FORGE_THREADS", v, 1); }
    ~ThreadsEnv() { unsetenv("HECKE_FORGE_THREADS"); }
};

}  // namespace

TEST_CASE("worker count follows the environment") {
    {
        ThreadsEnv e("3");
        CHECK(worker_count() == 3);
    }
    {
        ThreadsEnv e("0");
        CHECK(worker_count() >= 1);
    }
    {
        ThreadsEnv e("junk");
        CHECK(worker_count() >= 1);
    }
}

TEST_CASE("parallel map keeps index order and propagates errors") {
    ThreadsEnv e("4");
    auto v = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    CHECK(parallel_map<int>(0, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("numeric results do not depend on the worker count") {
    using namespace bessel;
    MasterReport a, b;
    affsym::JacksonResult ja, jb;
    const auto& R = rootsys::RootSystem::get(rootsys::Type::A1);
    Laurent2 F = affsym::to_weight_poly(daha1::epoly(-1));
    {
        ThreadsEnv e("1");
        a = master_formula_check(MasterKind::nonsym_complex, cplx(0.25, 0.3), 0.5, 0.7);
        ja = affsym::jackson_sum(R, F, {}, 1);
    }
    {
        ThreadsEnv e("4");
        b = master_formula_check(MasterKind::nonsym_complex, cplx(0.25, 0.3), 0.5, 0.7);
        jb = affsym::jackson_sum(R, F, {}, 1);
    }
    CHECK(a.lhs == b.lhs);
    CHECK(a.nodes == b.nodes);
    CHECK(ja.value == jb.value);
    CHECK(ja.shells_used == jb.shells_used);
}
