#include <partrev/cli.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <partrev/gate_library.hpp>
#include <partrev/metrics.hpp>
#include <partrev/netlist.hpp>
#include <partrev/pla.hpp>

namespace partrev
{

namespace
{

/* raised for bad arguments; maps to exit_code::usage */
class usage_error : public error
{
public:
  using error::error;
};

struct options
{
  std::string target;
  std::string second;
  std::string input;
  std::string domain;
  std::string format = "text";
  std::string out_path;
  std::string name;
  std::vector<std::string> gate_files;
};

report_format parse_format( std::string const& text )
{
  if ( text == "text" )
  {
    return report_format::text;
  }
  if ( text == "csv" )
  {
    return report_format::csv;
  }
  throw usage_error( fmt::format( "unknown format '{}'", text ) );
}

void print_collisions( std::ostream& os, std::vector<collision> const& collisions, uint32_t in_width,
                       uint32_t out_width )
{
  for ( auto const& c : collisions )
  {
    os << "  collision: " << to_string( c, in_width, out_width ) << '\n';
  }
}

class command_runner
{
public:
  command_runner( options const& opts, std::ostream& out, std::ostream& err ) : opts_( opts ), out_( out ), err_( err )
  {
    for ( auto const& path : opts.gate_files )
    {
      registry_.load( path );
    }
  }

  int gate_verify()
  {
    auto gate = resolve_gate( opts_.target );
    if ( !opts_.domain.empty() )
    {
      gate.declared_domain = input_domain::parse( gate.num_inputs(), opts_.domain );
    }
    auto const verdict = verify_gate( gate );
    switch ( verdict.kind )
    {
    case reversibility::fully_reversible:
      out_ << gate.name << ": fully reversible\n";
      return exit_code::success;
    case reversibility::partially_reversible:
    {
      out_ << gate.name << ": partially reversible on domain " << verdict.domain->to_string() << '\n';
      auto const outside = is_injective_on( gate.table, input_domain::full( gate.num_inputs() ) ).collisions;
      out_ << fmt::format( "  outside the domain: {} colliding pair{}\n", outside.size(), outside.size() == 1u ? "" : "s" );
      print_collisions( out_, outside, gate.num_inputs(), gate.num_outputs() );
      return exit_code::success;
    }
    case reversibility::irreversible:
      out_ << gate.name << ": irreversible";
      if ( gate.declared_domain )
      {
        out_ << " on domain " << gate.declared_domain->to_string();
      }
      out_ << '\n';
      print_collisions( out_, verdict.collisions, gate.num_inputs(), gate.num_outputs() );
      return exit_code::failure;
    }
    return exit_code::failure;
  }

  int gate_show()
  {
    auto const gate = resolve_gate( opts_.target );
    emit( [&]( std::ostream& os ) { write_gate_spec( os, gate ); } );
    return exit_code::success;
  }

  int synth_prg()
  {
    if ( opts_.out_path.empty() )
    {
      throw usage_error( "synth prg needs --out <path>" );
    }
    auto spec = read_partial_pla_file( opts_.target );
    if ( !opts_.domain.empty() )
    {
      auto const domain = input_domain::parse( spec.in_width(), opts_.domain );
      std::vector<uint32_t> outputs;
      for ( auto x : domain.members() )
      {
        auto const y = spec.assigned( x );
        if ( !y )
        {
          throw usage_error( fmt::format( "--domain member {} has no assigned output in {}", x, opts_.target ) );
        }
        outputs.push_back( *y );
      }
      spec = partial_spec( spec.in_width(), spec.out_width(), domain, std::move( outputs ) );
    }

    gate_def gate = [&] {
      try
      {
        return synthesize_prg( spec, gate_name() );
      }
      catch ( collision_error const& e )
      {
        err_ << e.what() << '\n';
        print_collisions( err_, e.collisions(), spec.in_width(), spec.out_width() );
        throw failure_signal{};
      }
      catch ( width_error const& e )
      {
        err_ << e.what() << '\n';
        throw failure_signal{};
      }
    }();

    out_ << gate.name << ": completed " << spec.domain().to_string() << " to a permutation\n";
    for ( uint32_t x = 0u; x < gate.table.num_rows(); ++x )
    {
      if ( !spec.domain().contains( x ) )
      {
        out_ << "  " << to_bits( x, gate.num_inputs() ) << " -> " << to_bits( gate.table[x], gate.num_outputs() ) << '\n';
      }
    }
    std::ofstream file( opts_.out_path );
    if ( !file )
    {
      throw usage_error( fmt::format( "cannot write '{}'", opts_.out_path ) );
    }
    write_gate_spec( file, gate );
    return exit_code::success;
  }

  int circuit_simulate()
  {
    if ( opts_.input.empty() )
    {
      throw usage_error( "circuit simulate needs --input <bits>" );
    }
    auto const n = resolve_netlist( opts_.target );
    auto const input = bit_word::parse( opts_.input );
    if ( input.width() != n.primary_inputs().size() )
    {
      throw usage_error( fmt::format( "--input has {} bits, {} has {} primary inputs", input.width(), n.name(),
                                      n.primary_inputs().size() ) );
    }
    auto const result = simulate( n, input );
    out_ << "primary " << result.primary.to_string() << '\n';
    out_ << "garbage " << ( result.garbage.width() == 0u ? std::string( "(none)" ) : result.garbage.to_string() ) << '\n';
    return exit_code::success;
  }

  int circuit_table()
  {
    auto const table = to_truth_table( resolve_netlist( opts_.target ) );
    emit( [&]( std::ostream& os ) { write_pla( os, table ); } );
    return exit_code::success;
  }

  int circuit_metrics( report_format format )
  {
    auto const n = resolve_netlist( opts_.target );
    write_reports( out_, { { n.name(), measure( n ) } }, format );
    return exit_code::success;
  }

  int compare_netlists()
  {
    auto const a = resolve_netlist( opts_.target );
    auto const b = resolve_netlist( opts_.second );
    write_comparison( out_, { a.name(), measure( a ) }, { b.name(), measure( b ) }, parse_format( opts_.format ) );
    if ( opts_.domain.empty() )
    {
      return exit_code::success;
    }
    auto const ta = to_truth_table( a );
    auto const tb = to_truth_table( b );
    if ( ta.in_width() != tb.in_width() || ta.out_width() != tb.out_width() )
    {
      out_ << "equivalence: not comparable (different boundary widths)\n";
      return exit_code::failure;
    }
    auto const domain = input_domain::parse( ta.in_width(), opts_.domain );
    bool const same = table_equal_on( ta, tb, domain );
    out_ << "equivalent on " << domain.to_string() << ": " << ( same ? "yes" : "no" ) << '\n';
    return same ? exit_code::success : exit_code::failure;
  }

  int demo_table2()
  {
    auto const format = parse_format( opts_.format );
    auto const adder = build_tsg_ripple_adder();
    auto const converter = build_prg_converter();
    named_report const baseline{ adder.name(), measure( adder ) };
    named_report const proposed{ converter.name(), measure( converter ) };

    out_ << "BCD to excess-3 converter: TSG ripple adder vs. partial reversible gate\n";
    write_comparison( out_, baseline, proposed, format );

    std::vector<std::string> mismatches;

    auto const adder_table = to_truth_table( adder );
    auto const converter_table = to_truth_table( converter );
    uint32_t agree = 0u;
    auto const bcd = input_domain::bcd();
    for ( auto x : bcd.members() )
    {
      auto const expected = x + 3u;
      if ( adder_table[x] == expected && converter_table[x] == expected )
      {
        ++agree;
      }
      else
      {
        mismatches.push_back( fmt::format( "input {}: tsg-adder {}, prg-converter {}, expected {}", to_bits( x, 4u ),
                                           to_bits( adder_table[x], 4u ), to_bits( converter_table[x], 4u ),
                                           to_bits( expected, 4u ) ) );
      }
    }
    out_ << fmt::format( "equivalence on {}: {}/10 inputs give x + 3 on both circuits\n",
                         bcd.to_string(), agree );

    auto const expect = [&mismatches]( std::string const& what, std::string const& actual, std::string const& wanted ) {
      if ( actual != wanted )
      {
        mismatches.push_back( fmt::format( "{}: got {}, expected {}", what, actual, wanted ) );
      }
    };
    auto const cmp = compare( baseline.cost, proposed.cost );
    expect( "tsg-adder gates", std::to_string( baseline.cost.gates ), "4" );
    expect( "tsg-adder garbage", std::to_string( baseline.cost.garbage ), "9" );
    expect( "tsg-adder delay", std::to_string( baseline.cost.delay ), "4" );
    expect( "prg-converter gates", std::to_string( proposed.cost.gates ), "1" );
    expect( "prg-converter garbage", std::to_string( proposed.cost.garbage ), "0" );
    expect( "prg-converter delay", std::to_string( proposed.cost.delay ), "1" );
    expect( "gate improvement", cmp.gates.to_string(), "400%" );
    expect( "garbage improvement", cmp.garbage.to_string(), "900%" );
    expect( "delay improvement", cmp.delay.to_string(), "400%" );

    if ( !mismatches.empty() )
    {
      out_ << "published values: MISMATCH\n";
      for ( auto const& m : mismatches )
      {
        out_ << "  " << m << '\n';
      }
      return exit_code::failure;
    }
    out_ << "published values: match (4, 9, 4 / 1, 0, 1 / 400%, 900%, 400%)\n";
    return exit_code::success;
  }

  /* thrown after a semantic failure has been reported */
  struct failure_signal
  {
  };

private:
  gate_def resolve_gate( std::string const& target ) const
  {
    if ( registry_.contains( target ) )
    {
      return *registry_.lookup( target );
    }
    if ( !std::filesystem::exists( target ) )
    {
      throw usage_error( fmt::format( "'{}' is neither a known gate nor a readable file", target ) );
    }
    return load_gate_spec( target, false );
  }

  netlist resolve_netlist( std::string const& target ) const
  {
    if ( target == "prg-converter" )
    {
      return build_prg_converter();
    }
    if ( target == "tsg-adder" )
    {
      return build_tsg_ripple_adder();
    }
    if ( !std::filesystem::exists( target ) )
    {
      throw usage_error( fmt::format( "'{}' is neither a built-in netlist nor a readable file", target ) );
    }
    return load_netlist( target, registry_ );
  }

  std::string gate_name() const
  {
    if ( !opts_.name.empty() )
    {
      return opts_.name;
    }
    auto stem = std::filesystem::path( opts_.out_path ).stem().string();
    for ( auto& c : stem )
    {
      if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' && c != '-' )
      {
        c = '_';
      }
    }
    if ( stem.empty() || !std::isalpha( static_cast<unsigned char>( stem.front() ) ) )
    {
      stem = "G" + stem;
    }
    return stem;
  }

  template<class Fn>
  void emit( Fn&& write ) const
  {
    if ( opts_.out_path.empty() )
    {
      write( out_ );
      return;
    }
    std::ofstream file( opts_.out_path );
    if ( !file )
    {
      throw usage_error( fmt::format( "cannot write '{}'", opts_.out_path ) );
    }
    write( file );
  }

  options const& opts_;
  std::ostream& out_;
  std::ostream& err_;
  gate_registry registry_;
};

} // namespace

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Reversible and partially reversible logic toolkit", "partrev" };
  app.require_subcommand( 1 );
  options opts;

  auto const add_gate_files = [&opts]( CLI::App* cmd ) {
    cmd->add_option( "--gate", opts.gate_files, "Gate-spec file to register before loading netlists" );
  };

  auto* gate = app.add_subcommand( "gate", "Inspect gate definitions" );
  gate->require_subcommand( 1 );
  auto* gate_verify = gate->add_subcommand( "verify", "Classify a gate as fully, partially or not reversible" );
  gate_verify->add_option( "gate", opts.target, "Built-in gate name or gate-spec file" )->required();
  gate_verify->add_option( "--domain", opts.domain, "Domain to check: 'bcd' or a list such as 0..9" );
  auto* gate_show = gate->add_subcommand( "show", "Print a gate as a gate-spec document" );
  gate_show->add_option( "gate", opts.target, "Built-in gate name or gate-spec file" )->required();
  gate_show->add_option( "--out", opts.out_path, "Write to a file instead of stdout" );

  auto* synth = app.add_subcommand( "synth", "Synthesize gates" );
  synth->require_subcommand( 1 );
  auto* synth_prg = synth->add_subcommand( "prg", "Complete a partial specification to a permutation gate" );
  synth_prg->add_option( "spec", opts.target, "PLA file; '-' outputs mark unassigned rows" )->required();
  synth_prg->add_option( "--out", opts.out_path, "Gate-spec file to write" );
  synth_prg->add_option( "--domain", opts.domain, "Restrict the specification to this domain" );
  synth_prg->add_option( "--name", opts.name, "Gate name (default: stem of --out)" );

  auto* circuit = app.add_subcommand( "circuit", "Simulate and measure netlists" );
  circuit->require_subcommand( 1 );
  auto* circuit_simulate = circuit->add_subcommand( "simulate", "Evaluate one input word" );
  circuit_simulate->add_option( "netlist", opts.target, "prg-converter, tsg-adder or a netlist file" )->required();
  circuit_simulate->add_option( "--input", opts.input, "Input bits, most significant first" );
  add_gate_files( circuit_simulate );
  auto* circuit_table = circuit->add_subcommand( "table", "Print the exhaustive truth table" );
  circuit_table->add_option( "netlist", opts.target, "prg-converter, tsg-adder or a netlist file" )->required();
  circuit_table->add_option( "--out", opts.out_path, "Write to a file instead of stdout" );
  add_gate_files( circuit_table );
  auto* circuit_metrics = circuit->add_subcommand( "metrics", "Print gate, garbage, constant and delay counts" );
  circuit_metrics->add_option( "netlist", opts.target, "prg-converter, tsg-adder or a netlist file" )->required();
  std::string metrics_format = "csv";
  circuit_metrics->add_option( "--format", metrics_format, "csv (default) or text" );
  add_gate_files( circuit_metrics );

  auto* compare_cmd = app.add_subcommand( "compare", "Compare the costs of two netlists" );
  compare_cmd->add_option( "baseline", opts.target, "Baseline netlist" )->required();
  compare_cmd->add_option( "proposed", opts.second, "Proposed netlist" )->required();
  compare_cmd->add_option( "--format", opts.format, "text (default) or csv" );
  compare_cmd->add_option( "--domain", opts.domain, "Also check functional equivalence on this domain" );
  add_gate_files( compare_cmd );

  auto* demo = app.add_subcommand( "demo", "Reproduce reference results" );
  demo->require_subcommand( 1 );
  auto* demo_table2 = demo->add_subcommand( "table2", "BCD to excess-3: TSG ripple adder vs. PRG" );
  demo_table2->add_option( "--format", opts.format, "text (default) or csv" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  try
  {
    command_runner run( opts, out, err );
    if ( gate_verify->parsed() )
    {
      return run.gate_verify();
    }
    if ( gate_show->parsed() )
    {
      return run.gate_show();
    }
    if ( synth_prg->parsed() )
    {
      return run.synth_prg();
    }
    if ( circuit_simulate->parsed() )
    {
      return run.circuit_simulate();
    }
    if ( circuit_table->parsed() )
    {
      return run.circuit_table();
    }
    if ( circuit_metrics->parsed() )
    {
      return run.circuit_metrics( parse_format( metrics_format ) );
    }
    if ( compare_cmd->parsed() )
    {
      return run.compare_netlists();
    }
    if ( demo_table2->parsed() )
    {
      return run.demo_table2();
    }
  }
  catch ( command_runner::failure_signal const& )
  {
    return exit_code::failure;
  }
  catch ( invalid_netlist_error const& e )
  {
    err << e.what() << '\n';
    return exit_code::failure;
  }
  catch ( collision_error const& e )
  {
    err << e.what() << '\n';
    for ( auto const& c : e.collisions() )
    {
      err << "  collision: " << c.first << ", " << c.second << " -> " << c.output << '\n';
    }
    return exit_code::usage;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  err << "error: no command\n";
  return exit_code::usage;
}

} // namespace partrev
