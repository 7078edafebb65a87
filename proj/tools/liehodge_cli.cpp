// Command-line front end: regenerates the cocharacter tables, tensor-square
// decompositions, constraint tables and the surface ledger.
//
// Exit codes: 0 success, 1 invariant violation or inconsistent input, 2 usage.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "liehodge/commands.hpp"

namespace {

struct CommonFlags {
  std::string group;
  std::string format = "text";
  std::optional<std::int64_t> bound;
  std::string parity;
  unsigned threads = 1;
  bool verify = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_group, bool with_search) {
  if (with_group)
    cmd->add_option("group", f.group, "Exceptional group")->required()->check(CLI::IsMember({"e6", "e7"}));
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  if (with_search) {
    cmd->add_option("--bound", f.bound, "Search bound B on |<lambda, chi>| (default dim V - 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--parity", f.parity, "Keep only rows of this length parity")
        ->check(CLI::IsMember({"odd", "even"}));
  }
  cmd->add_option("--threads", f.threads, "Search threads")->check(CLI::Range(1u, 256u));
  cmd->add_flag("--verify", f.verify, "Re-check invariants before printing");
}

liehodge::CommandOptions options(const CommonFlags& f) {
  liehodge::CommandOptions o;
  o.bound = f.bound;
  if (!f.parity.empty()) o.parity = liehodge::parse_parity(f.parity);
  o.threads = f.threads;
  o.verify = f.verify;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cocharacter tables and representation-theoretic ledgers for E6 and E7"};
  app.require_subcommand(1);

  CommonFlags tables_f, adjoint_f, square_f, constraints_f, surface_f;
  std::string which = "full";
  bool half = false;
  liehodge::SurfaceInputs surface;

  auto* tables = app.add_subcommand("tables", "Hodge rows of dominant cocharacters of the minuscule representation");
  add_common(tables, tables_f, true, true);

  auto* adjoint = app.add_subcommand("adjoint-grading", "Grading of the adjoint representation under the reference witness");
  add_common(adjoint, adjoint_f, true, true);

  auto* square = app.add_subcommand("tensor-square", "Decompose V (x) V^dual, Sym^2 V or Alt^2 V");
  add_common(square, square_f, true, false);
  square->add_option("--which", which, "full, sym or alt")->check(CLI::IsMember({"full", "sym", "alt"}));

  auto* constraints = app.add_subcommand("constraints", "g_max and feasibility tables");
  add_common(constraints, constraints_f, true, true);
  constraints->add_flag("--half", half, "Require d < g/2");

  auto* ledger = app.add_subcommand("surface-ledger", "Numeric ledger of a surface with the E6 Hodge numbers");
  add_common(ledger, surface_f, false, false);
  ledger->add_option("--chi-o", surface.chi_o, "chi(O_X)");
  ledger->add_option("--c2", surface.c2, "c2(X)");
  ledger->add_option("--deg-min", surface.deg_d_min, "Lower bound on the degree of the difference morphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    liehodge::ReportDocument doc;
    const CommonFlags* f = nullptr;
    if (*tables) {
      f = &tables_f;
      doc = liehodge::cmd_tables(liehodge::parse_group(f->group), options(*f));
    } else if (*adjoint) {
      f = &adjoint_f;
      doc = liehodge::cmd_adjoint_grading(liehodge::parse_group(f->group), options(*f));
    } else if (*square) {
      f = &square_f;
      doc = liehodge::cmd_tensor_square(liehodge::parse_group(f->group), liehodge::parse_square_kind(which),
                                        options(*f));
    } else if (*constraints) {
      f = &constraints_f;
      doc = liehodge::cmd_constraints(liehodge::parse_group(f->group), half, options(*f));
    } else {
      f = &surface_f;
      doc = liehodge::cmd_surface_ledger(surface, options(*f));
    }
    std::cout << liehodge::render(doc, liehodge::parse_format(f->format));
    return 0;
  } catch (const liehodge::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const liehodge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
