// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <qciore/matrix3.hpp>
#include <qciore/modeltheory.hpp>
#include <qciore/parser.hpp>
#include <qciore/search.hpp>
#include <qciore/structure_io.hpp>

using namespace qciore;

namespace
{

Formula letters_formula()
{
  // eight letters, 3^8 valuations
  Signature s;
  ParseOptions opt;
  opt.allow_letters = true;
  return parse_formula( "((a -> b) & (c | ~d) & @(e -> f)) -> ((g | h) -> (a | ~a))", s, opt );
}

void BM_tautology( benchmark::State& st )
{
  auto f = letters_formula();
  bool parallel = st.range( 0 );
  for ( auto _ : st )
    benchmark::DoNotOptimize( parallel ? is_tautology3_parallel( f ) : is_tautology3( f ) );
}

SearchSpec exhausting_search()
{
  // valid, so every structure up to size 3 is examined
  SearchSpec s;
  s.signature = parse_signature( "R/2" );
  s.refute = parse_formula( "(forall x. R(x,x)) -> exists y. R(y,y)", s.signature );
  s.max_size = 3;
  return s;
}

void BM_search( benchmark::State& st )
{
  auto spec = exhausting_search();
  bool parallel = st.range( 0 );
  for ( auto _ : st )
    benchmark::DoNotOptimize( parallel ? find_countermodel_parallel( spec ) : find_countermodel( spec ) );
}

void BM_soundness( benchmark::State& st )
{
  SoundnessOptions o;
  o.signature = parse_signature( "P/1" );
  o.vars = { "x", "y" };
  o.max_size = 2;
  o.include_equality = false;
  o.parallel = st.range( 0 );
  for ( auto _ : st )
    benchmark::DoNotOptimize( soundness_harness( o ) );
}

void BM_elementary( benchmark::State& st )
{
  auto A = parse_structure( "domain = {a}\npred P/1 { dot={(a)} }\npred R/2 { plus={(a,a)} }" );
  auto B = parse_structure( "domain = {a, b}\npred P/1 { dot={(a),(b)} }\npred R/2 { plus={(a,a),(b,b)} minus={(a,b),(b,a)} }" );
  bool parallel = st.range( 0 );
  for ( auto _ : st )
    benchmark::DoNotOptimize( elementary_sub_bounded( A, B, 2, { "x", "y" }, parallel ) );
}

} // namespace

BENCHMARK( BM_tautology )->Arg( 0 )->Arg( 1 )->ArgName( "parallel" )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_search )->Arg( 0 )->Arg( 1 )->ArgName( "parallel" )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_soundness )->Arg( 0 )->Arg( 1 )->ArgName( "parallel" )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_elementary )->Arg( 0 )->Arg( 1 )->ArgName( "parallel" )->Unit( benchmark::kMillisecond );

BENCHMARK_MAIN();
