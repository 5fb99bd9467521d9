#include <qciore/cli.hpp>
#include <qciore/formula_enum.hpp>
#include <qciore/modeltheory.hpp>
#include <qciore/parser.hpp>
#include <qciore/proof_io.hpp>
#include <qciore/search.hpp>
#include <qciore/structure_io.hpp>
#include <qciore/twist.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qciore
{

namespace
{

using json = nlohmann::json;

// Thrown for bad input that CLI11 does not see (assignments, files).
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split( std::string const& s, char sep )
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in( s );
  while ( std::getline( in, cur, sep ) )
  {
    cur.erase( 0, cur.find_first_not_of( " \t" ) );
    cur.erase( cur.find_last_not_of( " \t" ) + 1 );
    if ( !cur.empty() )
      out.push_back( cur );
  }
  return out;
}

Assignment parse_assignment( std::string const& text, PartialStructure const& A )
{
  Assignment s;
  for ( auto const& item : split( text, ',' ) )
  {
    auto eq = item.find( '=' );
    if ( eq == std::string::npos )
      throw UsageError( "bad assignment '" + item + "', expected x=element" );
    auto x = item.substr( 0, eq );
    auto a = item.substr( eq + 1 );
    x.erase( x.find_last_not_of( " \t" ) + 1 );
    a.erase( 0, a.find_first_not_of( " \t" ) );
    auto idx = A.element_index( a );
    if ( !idx )
      throw UsageError( "unknown element '" + a + "'" );
    s.values[x] = *idx;
  }
  return s;
}

json assignment_json( Assignment const& s, PartialStructure const& A )
{
  json j = json::object();
  for ( auto const& [x, a] : s.values )
    j[x] = A.elements.at( a );
  return j;
}

// Non-empty, non-comment lines of a formula file.
std::vector<std::string> formula_lines( std::string const& path )
{
  std::vector<std::string> out;
  std::istringstream in( read_file( path ) );
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( auto h = line.find( '#' ); h != std::string::npos )
      line.erase( h );
    if ( line.find_first_not_of( " \t\r" ) != std::string::npos )
      out.push_back( line );
  }
  return out;
}

struct Output
{
  std::ostream& out;
  bool quiet = false;
  bool json_mode = false;

  void line( std::string const& s ) const
  {
    if ( !quiet && !json_mode )
      out << s << "\n";
  }
  void emit( json const& j ) const
  {
    if ( !quiet && json_mode )
      out << j.dump() << "\n";
  }
};

// ---------------------------------------------------------------------------

struct EvalArgs
{
  std::string structure, formula, assign;
  bool valid = false;
};

int cmd_eval( EvalArgs const& a, Output const& o )
{
  auto A = load_structure( a.structure );
  auto f = parse_formula( a.formula, A.signature );
  if ( a.valid )
  {
    auto r = is_valid_in( f, A );
    json j{ { "command", "eval" }, { "formula", to_string( f ) }, { "valid", r.valid } };
    if ( r.valid )
      o.line( "VALID" );
    else
    {
      o.line( "REFUTED" );
      o.line( "witness: " + to_string( *r.witness, A ) + " value " + to_string( r.witness_value ) );
      j["witness"] = assignment_json( *r.witness, A );
      j["value"] = to_string( r.witness_value );
    }
    o.emit( j );
    return r.valid ? 0 : 1;
  }
  auto s = parse_assignment( a.assign, A );
  for ( auto const& x : free_vars( f ) )
    if ( !s.values.contains( x ) )
      throw UsageError( "free variable " + x + " has no value; use --assign" );
  auto v = eval_formula( f, A, s );
  json j{ { "command", "eval" }, { "formula", to_string( f ) }, { "value", to_string( v ) },
          { "designated", designated( v ) } };
  o.line( to_string( v ) );
  if ( is_sentence( f ) )
  {
    auto t = to_string( sentence_trichotomy( f, A ) );
    o.line( t );
    j["trichotomy"] = t;
  }
  o.emit( j );
  return designated( v ) ? 0 : 1;
}

int cmd_check_proof( std::vector<std::string> const& files, Output const& o )
{
  LemmaStore store;
  bool all = true;
  json results = json::array();
  for ( auto const& file : files )
    for ( auto const& p : load_proofs( file ) )
    {
      auto v = check_and_store( p, store );
      json r{ { "name", p.name }, { "accepted", v.accepted } };
      if ( v.accepted )
        o.line( p.name + ": accepted" );
      else
      {
        all = false;
        o.line( p.name + ": rejected: " + to_string( *v.failure ) );
        r["step"] = v.failure->step;
        r["failure"] = to_string( *v.failure );
      }
      results.push_back( r );
    }
  o.emit( { { "command", "check-proof" }, { "accepted", all }, { "proofs", results } } );
  return all ? 0 : 1;
}

struct SearchArgs
{
  std::string sig, refute, refute_file, gamma_file;
  std::vector<std::string> gamma;
  std::size_t max = 1;
  bool equality_normal = false, progress = false, serial = false;
  std::optional<std::uint64_t> limit;
  std::optional<double> time_budget;
};

int cmd_search( SearchArgs const& a, Output const& o, std::ostream& err )
{
  std::vector<std::string> gamma_text = a.gamma;
  if ( !a.gamma_file.empty() )
    for ( auto const& l : formula_lines( a.gamma_file ) )
      gamma_text.push_back( l );
  std::string refute_text = a.refute;
  if ( !a.refute_file.empty() )
  {
    auto lines = formula_lines( a.refute_file );
    if ( lines.size() != 1 )
      throw UsageError( a.refute_file + ": expected exactly one formula" );
    refute_text = lines.front();
  }
  if ( refute_text.empty() )
    throw UsageError( "give --refute or --refute-file" );

  SearchSpec spec;
  spec.max_size = a.max;
  spec.equality_normal = a.equality_normal;
  spec.max_structures = a.limit;
  spec.time_budget_seconds = a.time_budget;
  if ( !a.sig.empty() )
  {
    spec.signature = parse_signature( a.sig );
    auto with_eq = spec.signature;
    with_eq.has_equality = with_eq.has_equality || a.equality_normal;
    for ( auto const& g : gamma_text )
      spec.gamma.push_back( parse_formula( g, with_eq ) );
    spec.refute = parse_formula( refute_text, with_eq );
  }
  else
  {
    ParseOptions opt;
    opt.infer_symbols = true;
    for ( auto const& g : gamma_text )
      spec.gamma.push_back( parse_formula( g, spec.signature, opt ) );
    spec.refute = parse_formula( refute_text, spec.signature, opt );
  }
  if ( a.progress )
  {
    spec.progress_every = 10000;
    spec.progress = [&err]( ProgressEvent const& e ) {
      err << json{ { "event", "progress" },
                   { "size", e.size },
                   { "index", e.index },
                   { "examined", e.examined },
                   { "elapsed", e.elapsed_seconds } }
                 .dump()
          << "\n";
    };
  }

  auto r = a.serial ? find_countermodel( spec ) : find_countermodel_parallel( spec );
  switch ( r.status )
  {
  case SearchResult::Status::found:
  {
    auto const& M = *r.model;
    o.line( "# countermodel: size " + std::to_string( r.size ) + ", structure " + std::to_string( r.index ) + ", " +
            std::to_string( r.examined ) + " examined" );
    o.line( "# refuting assignment " + to_string( *r.assignment, M ) + " gives " + to_string( r.value ) );
    if ( !o.quiet && !o.json_mode )
      o.out << print_structure( M );
    o.emit( { { "command", "search" },
              { "status", "found" },
              { "size", r.size },
              { "index", r.index },
              { "examined", r.examined },
              { "assignment", assignment_json( *r.assignment, M ) },
              { "value", to_string( r.value ) },
              { "structure", print_structure( M ) } } );
    return 1;
  }
  case SearchResult::Status::exhausted:
    o.line( "exhausted(" + std::to_string( a.max ) + ")" );
    o.emit( { { "command", "search" }, { "status", "exhausted" }, { "max", a.max }, { "examined", r.examined } } );
    return 0;
  case SearchResult::Status::limit:
    o.line( "limit: " + r.limit_reason + " after " + std::to_string( r.examined ) + " structures" );
    o.emit( { { "command", "search" }, { "status", "limit" }, { "reason", r.limit_reason }, { "examined", r.examined } } );
    return 3;
  }
  return 2;
}

int cmd_twist_verify( std::size_t max_bits, Output const& o )
{
  bool ok = true;
  json rows = json::array();
  auto report = [&]( std::string const& where, std::vector<TwistCheck> const& checks ) {
    for ( auto const& c : checks )
    {
      ok = ok && c.failures == 0;
      std::string line = where + ": " + c.property + ": " + std::to_string( c.cases ) + " cases, " +
                         std::to_string( c.failures ) + " failures";
      if ( c.failures )
        line += " (first: " + c.first_failure + ")";
      o.line( line );
      rows.push_back( { { "where", where }, { "property", c.property }, { "cases", c.cases }, { "failures", c.failures } } );
    }
  };
  for ( std::size_t n = 1; n <= max_bits; ++n )
    report( "algebra 2^" + std::to_string( n ), verify_twist_isomorphism( n ) );
  report( "domain 2, frame {x}", verify_lifted_quantifiers( AssignmentSpace( 2, { "x" } ) ) );
  report( "domain 2, frame {x,y}", verify_lifted_quantifiers( AssignmentSpace( 2, { "x", "y" } ) ) );
  o.emit( { { "command", "twist-verify" }, { "passed", ok }, { "checks", rows } } );
  return ok ? 0 : 1;
}

struct MtArgs
{
  std::string mode, a, b, vars = "x";
  std::size_t depth = 1;
};

int cmd_mt( MtArgs const& m, Output const& o )
{
  auto A = load_structure( m.a );
  auto B = load_structure( m.b );
  auto vars = split( m.vars, ',' );
  if ( m.mode == "sub" )
  {
    auto r = is_substructure( A, B );
    o.line( r.holds ? "substructure" : "not a substructure: " + r.violation->message );
    json j{ { "command", "mt sub" }, { "holds", r.holds } };
    if ( !r.holds )
      j["violation"] = { { "symbol", r.violation->symbol }, { "what", r.violation->what }, { "tuple", r.violation->tuple } };
    o.emit( j );
    return r.holds ? 0 : 1;
  }
  if ( m.mode == "tarski" )
  {
    auto r = tarski_conditions( A, B, enumerate_formulas( A.signature, vars, m.depth ), vars );
    json fails = json::array();
    for ( auto const& f : r.failures )
    {
      o.line( f.condition + " fails for " + to_string( f.formula ) + ", variable " + f.var + ", at " +
              to_string( f.assignment, A ) + ": " + f.missing );
      fails.push_back( { { "condition", f.condition },
                         { "formula", to_string( f.formula ) },
                         { "var", f.var },
                         { "assignment", assignment_json( f.assignment, A ) },
                         { "missing", f.missing } } );
    }
    o.line( std::to_string( r.checked ) + " cases checked up to depth " + std::to_string( m.depth ) + ", " +
            std::to_string( r.failures.size() ) + " failures" );
    o.emit( { { "command", "mt tarski" }, { "passed", r.passed() }, { "checked", r.checked }, { "failures", fails } } );
    return r.passed() ? 0 : 1;
  }
  bool elem = m.mode == "elem";
  auto v = elem ? elementary_sub_bounded( A, B, m.depth, vars ) : elementary_equiv_bounded( A, B, m.depth, vars );
  json j{ { "command", "mt " + m.mode }, { "passed", v.passed }, { "depth", v.depth }, { "formulas", v.formulas_checked } };
  std::string what = elem ? "elementary substructure" : "elementarily equivalent";
  if ( v.passed )
    o.line( what + " up to depth " + std::to_string( m.depth ) + " (" + std::to_string( v.formulas_checked ) +
            " formulas)" );
  else
  {
    std::string at = v.assignment ? " at " + to_string( *v.assignment, A ) : "";
    o.line( "not " + what + " up to depth " + std::to_string( m.depth ) + ": " + to_string( *v.formula ) + at +
            " is " + to_string( v.value_a ) + " in the first structure and " + to_string( v.value_b ) +
            " in the second" );
    j["formula"] = to_string( *v.formula );
    j["value_a"] = to_string( v.value_a );
    j["value_b"] = to_string( v.value_b );
    if ( v.assignment )
      j["assignment"] = assignment_json( *v.assignment, A );
  }
  o.emit( j );
  return v.passed ? 0 : 1;
}

int cmd_taut( std::string const& text, std::string const& matrix, Output const& o )
{
  Signature sig;
  ParseOptions opt;
  opt.allow_letters = true;
  auto f = parse_formula( text, sig, opt );
  if ( !is_propositional( f ) )
    throw UsageError( "taut expects a propositional formula over letters" );
  auto const& m = MatrixSpec::by_name( matrix );
  auto r = is_tautology3( f, m );
  json j{ { "command", "taut" }, { "matrix", m.name }, { "tautology", r.tautology }, { "valuations", r.valuations } };
  if ( r.tautology )
    o.line( "tautology (" + std::to_string( r.valuations ) + " valuations)" );
  else
  {
    auto v = eval_prop( f, *r.witness, m );
    o.line( "not a tautology: " + to_string( *r.witness ) + " gives " + to_string( v ) );
    json w = json::object();
    for ( auto const& [k, val] : *r.witness )
      w[k] = to_string( val );
    j["witness"] = w;
  }
  o.emit( j );
  return r.tautology ? 0 : 1;
}

int cmd_schemas( std::string const& matrix, Output const& o )
{
  bool all = true;
  json rows = json::array();
  for ( auto const& c : check_named_schemas( MatrixSpec::by_name( matrix ) ) )
  {
    all = all && c.passed;
    std::string line = c.id + ": " + ( c.passed ? "ok" : "fails" );
    if ( c.witness )
      line += " at " + to_string( *c.witness );
    if ( !c.error.empty() )
      line += " (" + c.error + ")";
    o.line( line + "   " + to_string( c.formula ) );
    rows.push_back( { { "id", c.id }, { "passed", c.passed } } );
  }
  o.emit( { { "command", "schemas" }, { "passed", all }, { "schemas", rows } } );
  return all ? 0 : 1;
}

struct SoundnessArgs
{
  std::string sig = "P/1,R/2", vars = "x,y", matrix = "ciore";
  std::size_t depth = 1, max_size = 2;
  bool no_equality = false, no_rules = false, serial = false;
};

int cmd_soundness( SoundnessArgs const& a, Output const& o )
{
  SoundnessOptions opt;
  opt.signature = parse_signature( a.sig );
  opt.vars = split( a.vars, ',' );
  opt.depth = a.depth;
  opt.max_size = a.max_size;
  opt.matrix = MatrixSpec::by_name( a.matrix );
  opt.include_equality = !a.no_equality;
  opt.include_rules = !a.no_rules;
  opt.parallel = !a.serial;
  auto r = soundness_harness( opt );
  json counts = json::object();
  for ( auto const& [id, n] : r.instances )
  {
    auto bad = r.violation_counts.contains( id ) ? r.violation_counts.at( id ) : 0;
    o.line( id + ": " + std::to_string( n ) + " instances, failing in " + std::to_string( bad ) + " structures" );
    counts[id] = { { "instances", n }, { "failing_structures", bad } };
  }
  for ( auto const& v : r.violations )
    o.line( "violation of " + v.schema + ": " + to_string( v.instance ) + " at " + to_string( v.assignment, v.structure ) +
            " gives " + to_string( v.value ) );
  o.line( std::to_string( r.structures ) + " structures, " + std::to_string( r.rechecked ) + " rechecks, " +
          std::to_string( r.recheck_mismatches ) + " mismatches" );
  bool ok = r.total_violations() == 0 && r.recheck_mismatches == 0;
  o.emit( { { "command", "soundness" },
            { "passed", ok },
            { "structures", r.structures },
            { "rechecked", r.rechecked },
            { "mismatches", r.recheck_mismatches },
            { "schemas", counts } } );
  return ok ? 0 : 1;
}

} // namespace

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Workbench for the three-valued paraconsistent first-order logic QCiore", "qciore" };
  app.require_subcommand( 1 );
  app.fallthrough();
  bool quiet = false, json_mode = false;
  app.add_flag( "-q,--quiet", quiet, "Print nothing; the exit code carries the answer" );
  app.add_flag( "--json", json_mode, "Print one JSON object instead of text" );

  EvalArgs ev;
  auto* eval = app.add_subcommand( "eval", "Evaluate a formula in a structure file" );
  eval->add_option( "structure", ev.structure, "Structure file" )->required();
  eval->add_option( "formula", ev.formula, "Formula" )->required();
  eval->add_option( "--assign", ev.assign, "Values of free variables, e.g. x=a,y=b" );
  eval->add_flag( "--valid", ev.valid, "Check validity over all assignments instead" );

  std::vector<std::string> proof_files;
  auto* check = app.add_subcommand( "check-proof", "Check proof files; later proofs may cite earlier ones" );
  check->add_option( "files", proof_files, "Proof files" )->required();

  SearchArgs sa;
  auto* search = app.add_subcommand( "search", "Search finite structures for a countermodel" );
  search->add_option( "--sig", sa.sig, "Signature, e.g. P/1,R/2,f/1,c (inferred from the formulas if omitted)" );
  search->add_option( "--refute", sa.refute, "Formula to refute" );
  search->add_option( "--refute-file", sa.refute_file, "File holding the formula to refute" );
  search->add_option( "--gamma", sa.gamma, "Premise that must be valid (repeatable)" );
  search->add_option( "--gamma-file", sa.gamma_file, "File of premises, one per line" );
  search->add_option( "--max", sa.max, "Largest domain size" )->check( CLI::PositiveNumber );
  search->add_flag( "--equality-normal", sa.equality_normal, "Only structures with normal equality" );
  search->add_option( "--limit", sa.limit, "Stop after this many structures" );
  search->add_option( "--time-budget", sa.time_budget, "Stop after this many seconds" );
  search->add_flag( "--progress", sa.progress, "JSON-lines progress on stderr" );
  search->add_flag( "--serial", sa.serial, "Use the single-threaded search" );

  std::size_t max_bits = 3;
  auto* twist = app.add_subcommand( "twist-verify", "Exhaustively check the triple/pair twist isomorphism" );
  twist->add_option( "--max-bits", max_bits, "Largest Boolean algebra 2^n" )->check( CLI::Range( 1, 4 ) );

  MtArgs mt;
  auto* mtc = app.add_subcommand( "mt", "Bounded model-theoretic checks between two structure files" );
  mtc->add_option( "mode", mt.mode, "sub, tarski, elem or equiv" )
      ->required()
      ->check( CLI::IsMember( { "sub", "tarski", "elem", "equiv" } ) );
  mtc->add_option( "first", mt.a, "Smaller (or first) structure" )->required();
  mtc->add_option( "second", mt.b, "Larger (or second) structure" )->required();
  mtc->add_option( "--depth", mt.depth, "Formula depth bound" );
  mtc->add_option( "--vars", mt.vars, "Variables for enumerated formulas" );

  std::string taut_formula, matrix = "ciore";
  auto* taut = app.add_subcommand( "taut", "Check a propositional formula against a 3-valued matrix" );
  taut->add_option( "formula", taut_formula, "Formula over letters" )->required();
  taut->add_option( "--matrix", matrix, "ciore, p1 or lfi1" );

  auto* schemas = app.add_subcommand( "schemas", "Check the propositional axioms and derived schemas" );
  schemas->add_option( "--matrix", matrix, "ciore, p1 or lfi1" );

  SoundnessArgs sd;
  auto* sound = app.add_subcommand( "soundness", "Check axioms and rules on all small structures" );
  sound->add_option( "--sig", sd.sig, "Signature of the instance pool" );
  sound->add_option( "--vars", sd.vars, "Variables" );
  sound->add_option( "--depth", sd.depth, "Instance pool depth" );
  sound->add_option( "--max-size", sd.max_size, "Largest domain size" );
  sound->add_option( "--matrix", sd.matrix, "ciore, p1 or lfi1" );
  sound->add_flag( "--no-equality", sd.no_equality, "Skip Eq1 and Eq2" );
  sound->add_flag( "--no-rules", sd.no_rules, "Skip MP and the quantifier rules" );
  sound->add_flag( "--serial", sd.serial, "Single-threaded" );

  std::vector<std::string> rev( args.rbegin(), args.rend() );
  try
  {
    app.parse( rev );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return 0;
  }
  catch ( CLI::CallForAllHelp const& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return 0;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Output o{ out, quiet, json_mode };
  try
  {
    if ( *eval )
      return cmd_eval( ev, o );
    if ( *check )
      return cmd_check_proof( proof_files, o );
    if ( *search )
      return cmd_search( sa, o, err );
    if ( *twist )
      return cmd_twist_verify( max_bits, o );
    if ( *mtc )
      return cmd_mt( mt, o );
    if ( *taut )
      return cmd_taut( taut_formula, matrix, o );
    if ( *schemas )
      return cmd_schemas( matrix, o );
    if ( *sound )
      return cmd_soundness( sd, o );
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace qciore
