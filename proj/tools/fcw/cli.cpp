#include "fcw/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fcw/complex.hpp"
#include "fcw/error.hpp"
#include "fcw/invariants.hpp"
#include "fcw/io.hpp"
#include "fcw/lambda_ring.hpp"
#include "fcw/morse.hpp"
#include "fcw/persistence.hpp"

namespace fcw::cli {

namespace {

// Unreadable input is a usage problem, not a domain one.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FilteredComplex load_complex(const std::string& path) { return parse_complex(read_input(path)); }

std::string line(const std::string& s) { return s + "\n"; }

std::string kv(const std::string& key, const std::string& value) { return key + "\t" + value + "\n"; }

// Flags shared by `euler` and `size`.
struct PolyView {
  bool derivative = false;
  bool at_one = false;

  std::string render(LambdaPoly p) const {
    if (derivative) p = fcw::derivative(p);
    return at_one ? to_string(eval_at_one(p)) : to_string(p);
  }
};

struct Options {
  std::string file;
  std::string file_b;
  std::string upto;
  std::string amount;
  std::string level;
  std::string boundaries;
  bool filtered = false;
  long long n = 0;
  int k = 0;
  std::optional<int> dim;
  PolyView view;
};

std::optional<Exponent> optional_level(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Exponent e = parse_extended(text);
  if (e.is_pos_inf()) return std::nullopt;
  return e;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Filtered CW complexes: Euler invariants, barcodes and constructions", "fcw"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options o;
  std::string payload;
  std::function<void()> action;

  auto unary = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", o.file, "Complex document (fcw/1), or - for stdin")->required();
    return cmd;
  };
  auto binary = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("a", o.file, "First complex document")->required();
    cmd->add_option("b", o.file_b, "Second complex document")->required();
    return cmd;
  };

  unary("validate", "Report every violated complex invariant")->callback([&] {
    action = [&] {
      auto x = parse_complex_unvalidated(read_input(o.file));
      auto violations = validate(x);
      if (violations.empty()) {
        payload = line("valid");
        return;
      }
      std::string report;
      for (const auto& v : violations) report += std::string(name(v.kind)) + "\t" + v.cell + "\t" + v.message + "\n";
      payload = report;
      throw ValidationError(std::to_string(violations.size()) + " violation(s)");
    };
  });

  unary("info", "Spectrum, finite weight range and cell counts")->callback([&] {
    action = [&] {
      auto x = load_complex(o.file);
      std::map<int, int> by_dim;
      int eternal = 0;
      for (const auto& c : x.cells()) {
        ++by_dim[c.dim];
        if (c.weight.is_neg_inf()) ++eternal;
      }
      auto points = spectrum(x);
      std::string joined;
      for (const auto& r : points) joined += (joined.empty() ? "" : " ") + to_string(r);
      payload = kv("cells", std::to_string(x.size()));
      for (const auto& [d, count] : by_dim) payload += kv("cells_dim_" + std::to_string(d), std::to_string(count));
      payload += kv("eternal_cells", std::to_string(eternal));
      payload += kv("spectrum", joined);
      payload += kv("min_finite_weight", points.empty() ? "none" : to_string(points.front()));
      payload += kv("max_finite_weight", points.empty() ? "none" : to_string(points.back()));
    };
  });

  {
    auto* cmd = unary("euler", "Euler polynomial (optionally truncated, differentiated, evaluated at t=1)");
    cmd->add_option("--upto", o.upto, "Keep cells of weight <= R");
    cmd->add_flag("--derivative", o.view.derivative, "Differentiate in t");
    cmd->add_flag("--at-one", o.view.at_one, "Evaluate at t=1");
    cmd->callback([&] {
      action = [&] { payload = line(o.view.render(euler_polynomial(load_complex(o.file), optional_level(o.upto)))); };
    });
  }
  {
    auto* cmd = unary("size", "Size polynomial (optionally differentiated, evaluated at t=1)");
    cmd->add_flag("--derivative", o.view.derivative, "Differentiate in t");
    cmd->add_flag("--at-one", o.view.at_one, "Evaluate at t=1");
    cmd->callback([&] { action = [&] { payload = line(o.view.render(size_polynomial(load_complex(o.file)))); }; });
  }
  {
    auto* cmd = unary("weighted-euler", "Weighted Euler characteristic");
    cmd->add_option("--upto", o.upto, "Keep cells of weight <= R");
    cmd->callback([&] {
      action = [&] { payload = line(to_string(weighted_euler_char(load_complex(o.file), optional_level(o.upto)))); };
    });
  }
  binary("match", "Matching number of two filtrations")->callback([&] {
    action = [&] { payload = line(std::to_string(matching_number(load_complex(o.file), load_complex(o.file_b)))); };
  });
  {
    auto* cmd = unary("kclass", "Class of (X, n) in the polynomial ring");
    cmd->add_option("-n", o.n, "Suspension degree");
    cmd->callback([&] { action = [&] { payload = line(to_string(kclass(load_complex(o.file), o.n))); }; });
  }
  unary("barcode", "Persistence barcode as TSV")->callback([&] {
    action = [&] { payload = to_tsv(barcode(load_complex(o.file))); };
  });
  unary("euler-curve", "Euler characteristic from the barcode at -inf and every spectral point")->callback([&] {
    action = [&] {
      auto x = load_complex(o.file);
      auto bars = barcode(x);
      payload = "r\teuler\n";
      payload += kv("-inf", std::to_string(euler_from_barcode(bars, Exponent::neg_inf())));
      for (const auto& r : spectrum(x)) payload += kv(to_string(r), std::to_string(euler_from_barcode(bars, r)));
    };
  });
  {
    auto* cmd = binary("bottleneck", "Exact bottleneck distance between barcodes");
    cmd->add_option("--dim", o.dim, "Restrict to one homological degree");
    cmd->callback([&] {
      action = [&] {
        payload = line(to_string(bottleneck(barcode(load_complex(o.file)), barcode(load_complex(o.file_b)), o.dim)));
      };
    });
  }
  binary("wedge", "One-point union")->callback([&] {
    action = [&] { payload = serialize_complex(wedge(load_complex(o.file), load_complex(o.file_b))); };
  });
  {
    auto* cmd = binary("product", "Naive (max-weight) or filtered (sum-weight) product");
    cmd->add_flag("--filtered", o.filtered, "Add weights instead of taking the max");
    cmd->callback([&] {
      action = [&] {
        auto v = o.filtered ? ProductVariant::filtered : ProductVariant::naive;
        payload = serialize_complex(product(load_complex(o.file), load_complex(o.file_b), v));
      };
    });
  }
  {
    auto* cmd = binary("smash", "Naive (max-weight) or filtered (sum-weight) smash product");
    cmd->add_flag("--filtered", o.filtered, "Add weights instead of taking the max");
    cmd->callback([&] {
      action = [&] {
        auto v = o.filtered ? ProductVariant::filtered : ProductVariant::naive;
        payload = serialize_complex(smash(load_complex(o.file), load_complex(o.file_b), v));
      };
    });
  }
  unary("suspend", "Reduced suspension")->callback([&] {
    action = [&] { payload = serialize_complex(suspend(load_complex(o.file))); };
  });
  {
    auto* cmd = unary("shift", "Raise every finite weight");
    cmd->add_option("--by", o.amount, "Rational shift")->required();
    cmd->callback([&] {
      action = [&] { payload = serialize_complex(shift(load_complex(o.file), parse_rational(o.amount))); };
    });
  }
  {
    auto* cmd = unary("cutoff", "Raise non-basepoint weights to at least A");
    cmd->add_option("--at", o.amount, "Rational cut-off level")->required();
    cmd->callback([&] {
      action = [&] { payload = serialize_complex(cutoff(load_complex(o.file), parse_rational(o.amount))); };
    });
  }
  {
    auto* cmd = app.add_subcommand("sphere", "Sphere with one k-cell at level L");
    cmd->add_option("-k", o.k, "Dimension")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("-l", o.level, "Level (rational or -inf)")->required();
    cmd->callback([&] {
      action = [&] {
        Exponent l = parse_extended(o.level);
        if (l.is_pos_inf()) throw ParseError("sphere level cannot be +inf");
        payload = serialize_complex(sphere(o.k, l));
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("morse-build", "Cell complex from Morse data");
    cmd->add_option("file", o.file, "Morse datum (value<TAB>index per line)")->required();
    cmd->add_option("--boundaries", o.boundaries, "JSON boundary map for the critical cells");
    cmd->callback([&] {
      action = [&] {
        auto datum = parse_morse_datum(read_input(o.file));
        std::optional<BoundaryMap> bounds;
        if (!o.boundaries.empty()) bounds = parse_boundary_map(read_input(o.boundaries));
        payload = serialize_complex(morse_complex(datum, bounds));
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("morse-bounds", "Sphere and wedge fragmentation-size bounds");
    cmd->add_option("file", o.file, "Morse datum")->required();
    cmd->callback([&] {
      action = [&] {
        auto datum = parse_morse_datum(read_input(o.file));
        payload = kv("spheres", to_string(bound_size_spheres(datum)));
        payload += kv("wedges", to_string(bound_size_wedges(datum)));
      };
    });
  }
  unary("linearize", "Canonical sphere linearization statistics")->callback([&] {
    action = [&] {
      auto lin = canonical_linearization(load_complex(o.file));
      auto stats = linearization_stats(lin);
      payload = kv("lambda", to_string(stats.lambda_poly));
      payload += kv("count", to_string(stats.count));
      payload += kv("weight", to_string(stats.weight));
      payload += kv("euler", to_string(euler_poly_rel(lin)));
    };
  });

  std::vector<std::string> argv_storage{"fcw"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  CommandResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = "usage: " + std::string(e.what());
    return result;
  }

  try {
    action();
    result.out = payload;
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = "ParseError: " + std::string(e.what());
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = "usage: " + std::string(e.what());
  } catch (const Error& e) {
    result.exit_code = 1;
    result.out = payload;
    result.err = std::string(e.name()) + ": " + e.what();
  }
  return result;
}

}  // namespace fcw::cli
