#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "parkbraid/commands.hpp"

using namespace parkbraid;

namespace {

struct Io {
  std::string in;
  std::string out;
};

void add_io(CLI::App* cmd, Io& io, bool with_input = true) {
  if (with_input) cmd->add_option("--in", io.in, "Input JSON file (default: stdin)");
  cmd->add_option("--out", io.out, "Output file (default: stdout)");
}

Json read_input(const Io& io) {
  std::string text;
  if (io.in.empty() || io.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(io.in);
    if (!file) throw Error("io_error", "cannot open " + io.in);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_json(text);
}

void write_output(const Io& io, const std::string& text) {
  if (io.out.empty() || io.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(io.out);
  if (!file) throw Error("io_error", "cannot write " + io.out);
  file << text;
}

std::string line(const Json& j) { return j.dump() + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions, distinguished bases of A_n and the braid group action"};
  app.require_subcommand(1);

  Io io;
  int n = 0;
  int max_n = 0;
  std::string direction = "auto";
  std::string kind;
  std::string word;
  std::string format = "ascii";
  std::string target;
  std::string suite = "all";
  bool count_only = false;
  bool inject_fault = false;

  auto* convert = app.add_subcommand("convert", "Parking function <-> distinguished basis");
  convert->add_option("direction", direction, "pf-to-basis, basis-to-pf or auto")
      ->check(CLI::IsMember({"pf-to-basis", "basis-to-pf", "auto"}));
  add_io(convert, io);

  auto* enumerate = app.add_subcommand("enumerate", "List or count objects of size n");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("kind", kind, "pf, bases, nondecreasing or chains")
      ->required()
      ->check(CLI::IsMember({"pf", "bases", "nondecreasing", "chains"}));
  enumerate->add_flag("--count", count_only, "Print only the number of objects");
  enumerate->add_option("--max-n", max_n, "Raise the size limit");
  add_io(enumerate, io, false);

  auto* braid = app.add_subcommand("braid", "Apply a braid word to a basis or parking function");
  auto* braid_apply = braid->add_subcommand("apply", "Apply a word, letters left to right");
  braid_apply->add_option("word", word, "Signed generators, e.g. \"1 -2 1\"")->required();
  add_io(braid_apply, io);
  braid->require_subcommand(1);

  auto* orbit = app.add_subcommand("orbit", "Action graph of all generators on PF_n");
  orbit->add_option("n", n)->required();
  orbit->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  add_io(orbit, io, false);

  auto* render = app.add_subcommand("render", "Draw arcs, diagrams, orbits or Hom/Ext tables");
  render->add_option("target", target, "arcs, diagram, orbit or table")->required();
  render->add_option("--format", format, "ascii, svg, dot or json");
  add_io(render, io);

  auto* quiver = app.add_subcommand("quiver", "Exceptional sequence of a basis");
  auto* quiver_table = quiver->add_subcommand("table", "Hom and Ext^1 matrices");
  add_io(quiver_table, io);
  quiver->require_subcommand(1);

  auto* nc = app.add_subcommand("nc", "Maximal chains of non-crossing partitions");
  nc->add_option("direction", direction, "to-chain, to-basis or auto")
      ->check(CLI::IsMember({"to-chain", "to-basis", "auto"}));
  add_io(nc, io);

  auto* verify = app.add_subcommand("verify", "Exhaustive identity checks at size n");
  verify->add_option("n", n)->required();
  verify->add_option("suite", suite, "all, bijection, braid, quiver or noncrossing");
  verify->add_flag("--inject-fault", inject_fault, "Flip one Seifert sign to test the harness");
  verify->add_option("--max-n", max_n, "Raise the size limit (default 7)");
  add_io(verify, io, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "parkbraid: error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    int code = 0;
    if (convert->parsed()) {
      write_output(io, line(cmd_convert(read_input(io), direction)));
    } else if (enumerate->parsed()) {
      write_output(io, cmd_enumerate(n, kind, count_only, max_n));
    } else if (braid_apply->parsed()) {
      write_output(io, line(cmd_braid(read_input(io), word)));
    } else if (orbit->parsed()) {
      write_output(io, cmd_orbit(n, format == "ascii" ? "dot" : format));
    } else if (render->parsed()) {
      const RenderSpec spec{parse_format(format), parse_target(target)};
      const Json input = read_input(io);
      write_output(io, cmd_render(input, spec));
    } else if (quiver_table->parsed()) {
      write_output(io, line(cmd_quiver(read_input(io))));
    } else if (nc->parsed()) {
      write_output(io, line(cmd_nc(read_input(io), direction)));
    } else if (verify->parsed()) {
      const auto result = cmd_verify(n, suite, inject_fault, max_n > 0 ? max_n : 7);
      write_output(io, result.text);
      code = result.exit_code;
    }
    return code;
  } catch (const Error& e) {
    std::cerr << "parkbraid: error: " << e.code() << ": " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "parkbraid: error: internal: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "parkbraid: error: failure: " << e.what() << "\n";
  }
  return 1;
}
