// diairesis: four-valued determination logic and dichotomic division trees
// over item/predicate tables, from the command line.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"

#include "diairesis/diairesis.hpp"

namespace {

using namespace diairesis;

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_comma_list(const std::string& text) {
  std::vector<std::string> out;
  if (detail::trim(text).empty()) return out;
  std::string field;
  for (char c : text) {
    if (c == ',') {
      out.push_back(detail::trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(detail::trim(field));
  return out;
}

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// options shared by the tree-building subcommands
struct TreeOptions {
  std::string input;
  bool json = false;
  std::string order_text;
  bool order_given = false;
  bool balanced = false;
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

void add_tree_options(CLI::App* sc, TreeOptions& opts) {
  sc->add_option("--input", opts.input, "items file (CSV, or JSON with --json)")
      ->required();
  sc->add_flag("--json", opts.json, "read the items file as JSON");
  auto* order = sc->add_option("--order", opts.order_text,
                               "comma-separated predicates to divide by, in order");
  auto* balanced = sc->add_flag("--balanced", opts.balanced,
                                "pick the most balanced unused predicate at every node");
  sc->add_option("--max-depth", opts.max_depth,
                 "stop balanced division at this generation (default: no limit)")
      ->needs(balanced);
  order->excludes(balanced);
  balanced->excludes(order);
  sc->callback([order, &opts] { opts.order_given = order->count() > 0; });
}

DiaireticTree build_from_options(const TreeOptions& opts) {
  if (!opts.order_given && !opts.balanced)
    throw CLI::ValidationError("tree mode", "one of --order or --balanced is required");
  PredicateTable table = load_items_file(
      opts.input, opts.json ? ItemsFormat::json : ItemsFormat::csv);
  const Concept all = table.universe();
  if (opts.balanced) return build_tree_balanced(all, table, opts.max_depth);
  const auto order = split_comma_list(opts.order_text);
  return build_tree(all, std::span<const std::string>(order), table);
}

void print_tree_report(std::ostream& os, const DiaireticTree& tree) {
  for (const DiaireticNode* node : tree.nodes()) {
    os << node->phi.bits() << ' ' << phi_decimal(node->phi);
    if (node->is_leaf()) {
      os << ' ' << to_letter(branch_determination(node->phi));
      for (std::uint32_t m : node->extent.members())
        os << ' ' << tree.table().item_id(m);
    } else {
      os << " split " << *node->split_predicate;
    }
    os << '\n';
  }
  os << "tree " << to_letter(tree_determination(tree)) << '\n';
}

Valuation parse_assignments(const std::vector<std::string>& pairs) {
  Valuation v;
  for (const auto& pair : pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != pair.size())
      throw std::invalid_argument("bad assignment '" + pair +
                                  "' (expected name=t|f|b|n)");
    v[pair.substr(0, eq)] = value_from_letter(pair[eq + 1]);
  }
  return v;
}

void run_powerset(const std::string& items_text) {
  const auto items = split_comma_list(items_text);
  std::unordered_set<std::string> seen;
  for (const auto& item : items) {
    if (item.empty()) throw std::invalid_argument("empty item in the list");
    if (!seen.insert(item).second)
      throw std::invalid_argument("duplicate item '" + item + "'");
  }
  std::string line;
  for_each_subset(items.size(), [&](std::span<const std::size_t> subset) {
    line = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i > 0) line += ',';
      line += items[subset[i]];
    }
    line += "}";
    std::cout << line << '\n';
  });
  std::cout << "count=" << (std::size_t{1} << items.size()) << '\n';
}

void run_fractal(std::size_t depth, std::size_t cell_size, const std::string& out_path) {
  FractalParams params;
  params.depth = depth;
  params.cell_size = cell_size;
  const RasterImage img = render_fractal(params);
  const auto bytes = encode_ppm(img);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw WriteError("cannot open '" + out_path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw WriteError("failed writing '" + out_path + "'");
  std::cout << "width=" << img.width() << " height=" << img.height()
            << " fnv1a=" << hex64(fnv1a64(bytes)) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"four-valued determination logic and dichotomic division trees"};
  app.require_subcommand(1);

  // eval
  std::string formula_text;
  std::vector<std::string> assignment_pairs;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under an assignment");
  eval_cmd->add_option("formula", formula_text, "formula over ~ & | and atoms")
      ->required();
  eval_cmd->add_option("assignments", assignment_pairs,
                       "atom assignments, e.g. p=b q=n");

  // tree / dot / classify
  TreeOptions tree_opts, dot_opts, classify_opts;
  auto* tree_cmd = app.add_subcommand("tree", "build a division tree and list its nodes");
  add_tree_options(tree_cmd, tree_opts);
  auto* dot_cmd = app.add_subcommand("dot", "build a division tree and emit Graphviz");
  add_tree_options(dot_cmd, dot_opts);
  auto* classify_cmd =
      app.add_subcommand("classify", "walk one item down a division tree");
  add_tree_options(classify_cmd, classify_opts);
  std::string classify_item;
  classify_cmd->add_option("item", classify_item, "item id to classify")->required();

  // powerset
  std::string powerset_items;
  auto* powerset_cmd =
      app.add_subcommand("powerset", "list every subset of a comma-separated set");
  powerset_cmd->add_option("items", powerset_items,
                           "comma-separated items (may be an empty string)");

  // fractal
  std::size_t fractal_depth = 0;
  std::size_t fractal_cell_size = 8;
  std::string fractal_out;
  auto* fractal_cmd =
      app.add_subcommand("fractal", "render the determination fractal as binary PPM");
  fractal_cmd->add_option("--depth", fractal_depth, "generations to render (1..16)")
      ->required();
  fractal_cmd->add_option("--cell-size", fractal_cell_size,
                          "pixels per cell at the deepest band (default 8)");
  fractal_cmd->add_option("--out", fractal_out, "output PPM path")->required();

  try {
    app.parse(argc, argv);

    if (*eval_cmd) {
      const Value v = evaluate(parse(formula_text), parse_assignments(assignment_pairs));
      std::cout << to_letter(v) << '\n';
    } else if (*tree_cmd) {
      print_tree_report(std::cout, build_from_options(tree_opts));
    } else if (*dot_cmd) {
      std::cout << to_dot(build_from_options(dot_opts));
    } else if (*classify_cmd) {
      const DiaireticTree tree = build_from_options(classify_opts);
      std::cout << classify(classify_item, tree).phi.bits() << '\n';
    } else if (*powerset_cmd) {
      run_powerset(powerset_items);
    } else if (*fractal_cmd) {
      run_fractal(fractal_depth, fractal_cell_size, fractal_out);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const MissingAtomError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const UnknownPredicateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const UnknownItemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const Error& e) {
    // syntax errors, malformed input files, raster dimension overflow
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
