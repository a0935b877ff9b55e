/*
   Copyright 2026 modind contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "modind/decomp.hpp"
#include "modind/instance_gen.hpp"

using namespace modind;
using gf::Field;
using gf::FieldElem;
using linalg::Matrix;

namespace {

Matrix random_square(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, gf::field_order(f) - 1);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = FieldElem::from_index(f, dist(rng));
    return m;
}

void BM_rref(benchmark::State& state) {
    Field f = gf::mk_field(101, 1);
    std::mt19937_64 rng(1);
    Matrix m = random_square(f, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(linalg::rref(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64);

void BM_factor_poly(benchmark::State& state) {
    Field f = gf::mk_field(101, 1);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::uint64_t> dist(0, 100);
    std::vector<FieldElem> cs;
    for (std::int64_t i = 0; i < state.range(0); ++i)
        cs.push_back(FieldElem::from_index(f, dist(rng)));
    cs.push_back(FieldElem::one(f));
    gf::Poly poly(f, cs);
    for (auto _ : state) benchmark::DoNotOptimize(gf::factor_poly(poly));
}
BENCHMARK(BM_factor_poly)->Arg(8)->Arg(16)->Arg(32);

void BM_decompose_q8c4(benchmark::State& state) {
    Field f = gf::mk_field(3, 1);
    induct::InductionInput in;
    in.p = 2;
    in.rep.field = f;
    in.rep.dim = 2;
    auto e = [&](std::int64_t v) { return FieldElem::from_int(f, v); };
    in.rep.gens = {Matrix::from_rows(f, {{e(0), e(1)}, {e(-1), e(0)}})};
    in.conj = {Matrix::from_rows(f, {{e(0), e(-1)}, {e(1), e(0)}})};
    in.a_p = Matrix::scalar(f, 2, e(-1));
    decomp::Options opt;
    opt.oracle = decomp::OracleMode::Off;
    for (auto _ : state) benchmark::DoNotOptimize(decomp::decompose(in, opt));
}
BENCHMARK(BM_decompose_q8c4);

void BM_decompose_random_order_p(benchmark::State& state) {
    auto in = gen::random_instance(static_cast<std::size_t>(state.range(0)),
                                   gf::mk_field(5, 1), 42);
    decomp::Options opt;
    opt.oracle = decomp::OracleMode::Off;
    for (auto _ : state) benchmark::DoNotOptimize(decomp::decompose(in, opt));
}
BENCHMARK(BM_decompose_random_order_p)->Arg(2)->Arg(3);

void BM_brute_force_lattice(benchmark::State& state) {
    auto in = gen::random_inner_instance(3, gf::mk_field(3, 1), 7);
    auto report = decomp::decompose(in);
    for (auto _ : state) benchmark::DoNotOptimize(decomp::brute_force_lattice(report.induced));
}
BENCHMARK(BM_brute_force_lattice);

}  // namespace

BENCHMARK_MAIN();
