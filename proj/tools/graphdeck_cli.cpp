// graphdeck: deck construction, common-card counting, extremal family
// generation, partial-deck recognizers, and exhaustive bound verification
// for small graphs. graph6 in, graph6/JSON-lines out.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphdeck/bruteforce.hpp"
#include "graphdeck/deck.hpp"
#include "graphdeck/enumerate.hpp"
#include "graphdeck/extremal.hpp"
#include "graphdeck/families.hpp"
#include "graphdeck/graph6.hpp"
#include "graphdeck/recognizers.hpp"
#include "graphdeck/report_json.hpp"

namespace {

constexpr int kExitBoundViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCap = 4;
constexpr int kExitDomain = 5;

std::string read_graph6_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(std::cin, line))
    throw graphdeck::data_error("no graph6 line on standard input");
  return line;
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw graphdeck::data_error("cannot open deck file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace graphdeck;

  CLI::App app{"graph deck workbench"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker thread cap (default: GRAPHDECK_THREADS or hardware)");

  // deck
  auto* cmd_deck = app.add_subcommand("deck", "print the full deck of a graph");
  std::string deck_g6;
  cmd_deck->add_option("graph6", deck_g6, "graph6 line ('-' = stdin)")
      ->required();

  // common
  auto* cmd_common =
      app.add_subcommand("common", "common cards of two graphs of equal order");
  std::string common_a, common_b;
  bool common_pretty = false;
  cmd_common->add_option("graph6_a", common_a, "first graph6 line")->required();
  cmd_common->add_option("graph6_b", common_b, "second graph6 line")->required();
  cmd_common->add_flag("--pretty", common_pretty, "plain table output");

  // family
  auto* cmd_family = app.add_subcommand(
      "family", "emit an extremal forest/unicyclic pair (two graph6 lines + "
                "metadata)");
  int family_id = 0, family_k = 0;
  bool family_check = false;
  cmd_family->add_option("--id", family_id, "family id: 1, 2 or 3")
      ->required();
  cmd_family->add_option("--k", family_k, "family parameter k >= 2")
      ->required();
  cmd_family->add_flag("--check", family_check,
                       "recompute the common-card count");

  // recognize
  auto* cmd_rec =
      app.add_subcommand("recognize", "decide a property from a partial deck");
  std::string rec_property, rec_deck_path;
  int rec_n = 0, rec_cap = kDefaultOracleCap;
  bool rec_pretty = false;
  cmd_rec->add_option("--property", rec_property,
                      "tree | forest | connected | bipartite | girth")
      ->required();
  cmd_rec->add_option("--n", rec_n, "parent order")->required();
  cmd_rec->add_option("--deck", rec_deck_path, "deck file ('-' = stdin)")
      ->required();
  cmd_rec->add_option("--oracle-cap", rec_cap, "preimage oracle order cap");
  cmd_rec->add_flag("--pretty", rec_pretty, "plain text output");

  // preimages
  auto* cmd_pre = app.add_subcommand(
      "preimages", "all order-n graphs whose deck contains the subdeck");
  std::string pre_deck_path;
  int pre_n = 0, pre_cap = kDefaultOracleCap;
  cmd_pre->add_option("--n", pre_n, "parent order")->required();
  cmd_pre->add_option("--deck", pre_deck_path, "deck file ('-' = stdin)")
      ->required();
  cmd_pre->add_option("--oracle-cap", pre_cap, "preimage oracle order cap");

  // search
  auto* cmd_search = app.add_subcommand(
      "search", "maximize common cards over cross-class pairs");
  int search_n = 0;
  std::string search_a = "all", search_b = "all";
  bool search_girth = false, search_pretty = false;
  cmd_search->add_option("--n", search_n, "graph order")->required();
  cmd_search->add_option("--class-a", search_a,
                         "class flags joined by '+', e.g. connected+unicyclic");
  cmd_search->add_option("--class-b", search_b, "second class");
  cmd_search->add_flag("--different-girth", search_girth,
                       "restrict to pairs of different girth");
  cmd_search->add_flag("--pretty", search_pretty, "plain table output");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "check a named bound exhaustively over a range of orders");
  std::string verify_name;
  int verify_min = 0, verify_max = 0;
  bool verify_pretty = false;
  cmd_verify->add_option("--bound", verify_name, "bound name (see README)")
      ->required();
  cmd_verify->add_option("--n-min", verify_min, "first order")->required();
  cmd_verify->add_option("--n-max", verify_max, "last order")->required();
  cmd_verify->add_flag("--pretty", verify_pretty, "plain table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_deck) {
      Graph g = decode_graph6(read_graph6_arg(deck_g6));
      std::cout << write_deck_file(full_deck(g));
      return 0;
    }

    if (*cmd_common) {
      Graph a = decode_graph6(read_graph6_arg(common_a));
      Graph b = decode_graph6(read_graph6_arg(common_b));
      if (a.order() != b.order())
        throw domain_error("common: graphs must have equal order");
      Deck da = full_deck(a), db = full_deck(b);
      int total = common_card_count(da, db);
      struct Row {
        std::string card;
        int in_a, in_b;
      };
      std::vector<Row> rows;
      for (const auto& [form, mult] : da.cards) {
        for (const auto& [bform, bmult] : db.cards) {
          if (form == bform) {
            rows.push_back({form.to_graph6(), mult, bmult});
            break;
          }
        }
      }
      if (common_pretty) {
        std::cout << "common cards: " << total << "\n";
        for (const Row& r : rows)
          std::cout << "  " << r.card << "  a=" << r.in_a << " b=" << r.in_b
                    << " common=" << std::min(r.in_a, r.in_b) << "\n";
      } else {
        ordered_json j;
        j["common"] = total;
        ordered_json cards = ordered_json::array();
        for (const Row& r : rows) {
          ordered_json c;
          c["card"] = r.card;
          c["a"] = r.in_a;
          c["b"] = r.in_b;
          c["common"] = std::min(r.in_a, r.in_b);
          cards.push_back(std::move(c));
        }
        j["cards"] = std::move(cards);
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (*cmd_family) {
      FamilyInstance inst = family(family_id, family_k);
      std::cout << encode_graph6(inst.forest) << "\n"
                << encode_graph6(inst.non_forest) << "\n";
      std::optional<int> measured;
      if (family_check)
        measured = common_card_count(inst.forest, inst.non_forest);
      std::cout << family_to_json(inst, measured).dump() << "\n";
      if (measured && *measured != inst.expected_common) {
        std::cerr << "family: measured common cards " << *measured
                  << " != expected " << inst.expected_common << "\n";
        return kExitBoundViolation;
      }
      return 0;
    }

    if (*cmd_rec) {
      auto prop = parse_property(rec_property);
      if (!prop) throw domain_error("unknown property '" + rec_property + "'");
      Subdeck sub = read_subdeck_file(read_file_or_stdin(rec_deck_path));
      if (sub.claimed_parent_order != rec_n)
        throw data_error("deck file claims n=" +
                         std::to_string(sub.claimed_parent_order) +
                         " but --n is " + std::to_string(rec_n));
      Verdict v = recognize(sub, rec_n, *prop, rec_cap, threads);
      if (rec_pretty) {
        ordered_json j = verdict_to_json(v);
        std::cout << "property " << j["property"].get<std::string>()
                  << ": " << j["decision"].get<std::string>();
        if (j.contains("value")) std::cout << " " << j["value"].dump();
        std::cout << " (method " << j["method"].get<std::string>()
                  << ", witnesses " << v.witness_count << ")\n";
      } else {
        std::cout << verdict_to_json(v).dump() << "\n";
      }
      return 0;
    }

    if (*cmd_pre) {
      Subdeck sub = read_subdeck_file(read_file_or_stdin(pre_deck_path));
      if (sub.claimed_parent_order != pre_n)
        throw data_error("deck file claims n=" +
                         std::to_string(sub.claimed_parent_order) +
                         " but --n is " + std::to_string(pre_n));
      for (const CanonicalForm& f : preimage_search(sub, pre_n, pre_cap, threads))
        std::cout << f.to_graph6() << "\n";
      return 0;
    }

    if (*cmd_search) {
      ExtremalRecord rec = max_common_cards(
          search_n, ClassSpec::parse(search_a), ClassSpec::parse(search_b),
          search_girth ? PairFilter::DifferentGirth : PairFilter::None,
          threads);
      if (search_pretty) {
        std::cout << "n=" << rec.n << " " << rec.class_a << " vs "
                  << rec.class_b << ": max common = " << rec.max_common
                  << " (" << rec.witness_total << " attaining pairs, "
                  << rec.pairs_examined << " intersecting of "
                  << rec.pairs_total << " pairs, " << rec.elapsed_ms
                  << " ms)\n";
        for (const auto& [a, b] : rec.witnesses)
          std::cout << "  " << a.to_graph6() << "  " << b.to_graph6() << "\n";
      } else {
        std::cout << extremal_record_to_json(rec).dump() << "\n";
      }
      return 0;
    }

    if (*cmd_verify) {
      const BoundSpec* spec = find_bound(verify_name);
      if (!spec) {
        std::string names;
        for (const BoundSpec& b : bound_registry()) names += " " + b.name;
        throw domain_error("unknown bound '" + verify_name + "'; known:" +
                           names);
      }
      if (verify_min > verify_max)
        throw domain_error("verify: empty order range");
      bool violated = false;
      for (int n = verify_min; n <= verify_max; ++n) {
        if (n < spec->n_min)
          throw domain_error("verify: bound " + spec->name +
                             " needs n >= " + std::to_string(spec->n_min));
        BoundReportRow row = verify_bound_row(*spec, n, threads);
        if (verify_pretty) {
          std::cout << spec->name << " n=" << n
                    << ": max=" << row.record.max_common
                    << " bound=" << row.bound_value
                    << (row.pass ? " pass" : " FAIL")
                    << (row.tight ? " (tight)" : "") << "\n";
        } else {
          std::cout << bound_row_to_json(row).dump() << "\n";
        }
        if (row.asserted && !row.pass) violated = true;
      }
      return violated ? kExitBoundViolation : 0;
    }
  } catch (const data_error& e) {
    std::cerr << "error: " << e.what();
    if (e.has_offset()) std::cerr << " (byte " << e.offset() << ")";
    std::cerr << "\n";
    return kExitData;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
