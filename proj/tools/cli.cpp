#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cnct/brunnian.hpp"
#include "cnct/catalog.hpp"
#include "cnct/search.hpp"
#include "cnct/text_format.hpp"

namespace cnct::cli {
namespace {

struct Command {
  Verb verb = Verb::Generate;
  std::vector<std::string> inputs;
  std::string output = "-";
  int n = 0;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
  bool summary = false;
  SearchBudget budget;
};

// Failure tied to an input file, reported as "<file>:<line>: <kind>: ...".
struct InputFailure {
  std::string file;
  int line;
  std::string kind;
  std::string message;
};

class Runner {
 public:
  Runner(const Command& command, Streams streams) : cmd_(command), io_(streams) {}

  int run() {
    switch (cmd_.verb) {
      case Verb::Generate: return emit_structure(load_structure(0));
      case Verb::Irreducibles: return emit_subsets(irreducibles(load_structure(0)));
      case Verb::Components:
        return emit_subsets(connected_components(load_structure(0)).components());
      case Verb::Sum: return emit_structure(sum(load_structure(0), load_structure(1)));
      case Verb::Realize: return emit_family(realize(load_structure(0)), "");
      case Verb::Analyze: return emit_structure(connectivity_structure(load_family(0)));
      case Verb::Tensor: return emit_family(tensor(load_family(0), load_family(1)), "");
      case Verb::Wedge: return emit_family(wedge(load_family(0), load_family(1)), "");
      case Verb::Enumerate: return enumerate();
      case Verb::Verify: return verify();
      case Verb::Minimize: return minimize();
    }
    return kExitError;
  }

 private:
  template <typename Fn>
  auto with_input(std::size_t slot, Fn&& fn) {
    const std::string& path = cmd_.inputs.at(slot);
    const std::string name = path == "-" ? "<stdin>" : path;
    std::ifstream file;
    if (path != "-") {
      file.open(path);
      if (!file) throw InputFailure{name, 0, "Io", "cannot open file"};
    }
    std::istream& in = path == "-" ? io_.in : file;
    try {
      return fn(in);
    } catch (const FormatError& e) {
      throw InputFailure{name, e.line(), std::string(to_string(e.kind())), e.what()};
    } catch (const Error& e) {
      throw InputFailure{name, 0, std::string(to_string(e.kind())), e.what()};
    }
  }

  ConnectivityStructure load_structure(std::size_t slot) {
    return with_input(slot, [](std::istream& in) { return read_structure(in); });
  }

  RandomFamily load_family(std::size_t slot) {
    return with_input(slot, [](std::istream& in) { return read_family(in); });
  }

  template <typename Fn>
  int with_output(Fn&& fn) {
    if (cmd_.output == "-") {
      fn(io_.out);
      return kExitOk;
    }
    std::ofstream file(cmd_.output);
    if (!file) throw InputFailure{cmd_.output, 0, "Io", "cannot open output file"};
    fn(file);
    return kExitOk;
  }

  int emit_structure(const ConnectivityStructure& k) {
    return with_output([&](std::ostream& out) { write_structure(out, k); });
  }

  int emit_subsets(const std::vector<Subset>& subsets) {
    return with_output([&](std::ostream& out) {
      for (Subset s : subsets) {
        const auto idx = s.indices();
        for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? " " : "") << idx[i];
        out << '\n';
      }
    });
  }

  int emit_family(const RandomFamily& phi, const std::string& comment) {
    return with_output([&](std::ostream& out) {
      if (!comment.empty()) out << "# " << comment << '\n';
      write_family(out, phi);
    });
  }

  int enumerate() {
    const StructureCatalog catalog = enumerate_structures(GroundSet(cmd_.n));
    return with_output([&](std::ostream& out) {
      for (const ConnectivityStructure& k : catalog.structures) {
        out << k.members().size() << ':';
        bool first = true;
        for (Subset s : k.nontrivial_members()) {
          out << (first ? " " : " | ");
          const auto idx = s.indices();
          for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? " " : "") << idx[i];
          first = false;
        }
        out << '\n';
      }
    });
  }

  int verify() {
    const StructureCatalog catalog = enumerate_structures(GroundSet(cmd_.n));
    std::vector<ConnectivityStructure> chosen;
    if (cmd_.sample) {
      for (std::size_t i : sample_indices(catalog.structures.size(), *cmd_.sample, cmd_.seed)) {
        chosen.push_back(catalog.structures[i]);
      }
    } else {
      chosen = catalog.structures;
    }
    const RoundtripReport report = verify_roundtrip(chosen);
    with_output([&](std::ostream& out) { write_report(out, report, cmd_.summary); });
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
  }

  int minimize() {
    const ConnectivityStructure k = load_structure(0);
    const SearchResult result = search_minimal(k, cmd_.budget);
    const std::string comment = "universe " + std::to_string(result.family.outcome_count()) +
                                (result.found_by_search ? " (search)" : " (canonical)");
    return emit_family(result.family, comment);
  }

  const Command& cmd_;
  Streams io_;
};

}  // namespace

int run(const std::vector<std::string>& args, Streams streams) {
  CLI::App app{"Connectivity structures of finite random families"};
  app.require_subcommand(1);
  Command cmd;

  auto add_io = [&](CLI::App* sub, std::size_t inputs) {
    sub->add_option("inputs", cmd.inputs, "input files ('-' for stdin)")
        ->required()
        ->expected(static_cast<int>(inputs));
    sub->add_option("-o,--output", cmd.output, "output file ('-' for stdout)");
  };
  struct Entry {
    const char* name;
    Verb verb;
    std::size_t inputs;
    const char* help;
  };
  const Entry file_verbs[] = {
      {"generate", Verb::Generate, 1, "close a .cnct file under overlapping unions"},
      {"irreducibles", Verb::Irreducibles, 1, "list the irreducible connected sets"},
      {"components", Verb::Components, 1, "list the connected components"},
      {"sum", Verb::Sum, 2, "sum of two structures"},
      {"realize", Verb::Realize, 1, "build a .fam realizing a structure"},
      {"analyze", Verb::Analyze, 1, "connectivity structure of a .fam"},
      {"tensor", Verb::Tensor, 2, "tensor product of two families"},
      {"wedge", Verb::Wedge, 2, "family realizing the intersection of two structures"},
  };
  for (const Entry& e : file_verbs) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_io(sub, e.inputs);
    sub->callback([&cmd, verb = e.verb] { cmd.verb = verb; });
  }

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every structure on n <= 5");
  enumerate->add_option("n", cmd.n, "ground set size")->required();
  enumerate->add_option("-o,--output", cmd.output, "output file ('-' for stdout)");
  enumerate->callback([&] { cmd.verb = Verb::Enumerate; });

  CLI::App* verify = app.add_subcommand("verify", "round-trip every structure on n <= 5");
  verify->add_option("n", cmd.n, "ground set size")->required();
  verify->add_option("--sample", cmd.sample, "check only this many seeded-sampled structures");
  verify->add_option("--seed", cmd.seed, "seed of the sampling generator");
  verify->add_flag("--summary", cmd.summary, "append a pass-count footer");
  verify->add_option("-o,--output", cmd.output, "output file ('-' for stdout)");
  verify->callback([&] { cmd.verb = Verb::Verify; });

  CLI::App* minimize = app.add_subcommand("minimize", "search a realization on a small universe");
  add_io(minimize, 1);
  minimize->add_option("--max-universe", cmd.budget.max_universe, "largest universe tried (<= 12)");
  minimize->add_option("--max-alphabet", cmd.budget.max_alphabet, "values per variable");
  minimize->add_option("--max-candidates", cmd.budget.max_candidates, "enumeration cap");
  minimize->add_option("--model", cmd.budget.probability_model, "uniform-any-m or uniform-dyadic")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ProbabilityModel>{
              {"uniform-any-m", ProbabilityModel::UniformAnyM},
              {"uniform-dyadic", ProbabilityModel::UniformDyadic}},
          CLI::ignore_case));
  minimize->callback([&] { cmd.verb = Verb::Minimize; });

  std::vector<const char*> argv{"cnct"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    streams.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    streams.err << "cnct: usage: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return Runner(cmd, streams).run();
  } catch (const InputFailure& f) {
    streams.err << "cnct: " << f.file << ':' << f.line << ": " << f.kind << ": " << f.message
                << '\n';
  } catch (const Error& e) {
    streams.err << "cnct: " << to_string(e.kind()) << ": " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace cnct::cli
