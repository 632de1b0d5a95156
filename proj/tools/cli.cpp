#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "qbc/acceptance.hpp"
#include "qbc/braid.hpp"
#include "qbc/cluster.hpp"
#include "qbc/error.hpp"
#include "qbc/exchange.hpp"
#include "qbc/ibox.hpp"
#include "qbc/pairing.hpp"
#include "qbc/pbw.hpp"
#include "qbc/qtorus.hpp"
#include "qbc/root_weyl.hpp"

namespace qbc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Exit code 1 with the report already printed.
struct VerificationFailed {};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CLI::ValidationError("list", "'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

Json matrix_json(const IntMatrix& m) { return Json(m.to_rows()); }

Json box_json(const IBox& b) { return Json::array({b.a, b.b}); }

Json exchange_json(const ExchangeMatrix& B) {
  Json j;
  j["J"] = B.size();
  j["J_ex"] = B.exchangeable_indices();
  j["J_fr"] = B.frozen_indices();
  j["b"] = matrix_json(B.rectangular());
  return j;
}

Json torus_json(const TorusElement& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) {
    Json t2 = Json::array();
    for (const auto& [e, v] : c.terms()) t2.push_back(Json::array({e, v}));
    terms.push_back(Json{{"exp", a}, {"t2", t2}});
  }
  return terms;
}

Json laurent_json(const Laurent& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back(Json{{"exp", a}, {"coeff", c}});
  return terms;
}

// Shared flags for commands that take a color sequence and optionally a chain.
struct SeqArgs {
  std::string type;
  std::string seq;
  int offset = 1;
  int c = 0;
  std::string moves;
  bool have_c = false;

  void attach(CLI::App* cmd, bool chain, bool chain_required) {
    cmd->add_option("--type", type, "Cartan type such as A2, D4, E6 (default: A_n, n = largest color)");
    cmd->add_option("--seq", seq, "comma-separated colors")->required();
    cmd->add_option("--offset", offset, "position of the first color");
    if (chain) {
      auto* opt_c = cmd->add_option("--c", c, "chain start position");
      auto* opt_m = cmd->add_option("--moves", moves, "chain moves over {L,R}");
      if (chain_required) {
        opt_c->required();
      }
      (void)opt_m;
    }
  }

  CartanDatum datum() const {
    if (!type.empty()) return CartanDatum::parse(type);
    const std::vector<int> colors = parse_list(seq);
    const int top = colors.empty() ? 1 : std::max(1, *std::max_element(colors.begin(), colors.end()));
    return CartanDatum::make(Family::A, top);
  }
  ColorSequence sequence() const { return ColorSequence(datum(), parse_list(seq), offset); }
  AdmissibleChain chain() const { return chain_from(sequence(), c, parse_moves(moves)); }
};

Json chain_json(const AdmissibleChain& ch) {
  Json j;
  j["seq"] = ch.seq().colors();
  j["offset"] = ch.seq().offset();
  j["c"] = ch.start();
  j["moves"] = moves_to_string(ch.moves());
  Json boxes = Json::array(), env = Json::array(), frozen = Json::array();
  for (int k = 1; k <= ch.length(); ++k) {
    boxes.push_back(box_json(ch.box(k)));
    env.push_back(box_json(ch.envelope(k)));
    if (ch.is_frozen(k)) frozen.push_back(k);
  }
  j["boxes"] = boxes;
  j["envelopes"] = env;
  j["frozen"] = frozen;
  return j;
}

void emit_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_table(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid, i-box and quantum cluster computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto print = [&](const Json& j) {
    if (format == "table") {
      emit_table(j, "", out);
    } else {
      out << j.dump() << '\n';
    }
  };

  auto on = [&](CLI::App* cmd, std::function<void()> fn) { cmd->callback(std::move(fn)); };

  // cartan
  std::string type_only = "A2";
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix, longest word and the involution *");
  cartan->add_option("--type", type_only)->required();
  on(cartan, [&] {
    const CartanDatum d = CartanDatum::parse(type_only);
    const LongestElement w0 = longest_and_star(d);
    Json j;
    j["type"] = d.name();
    j["rank"] = d.rank();
    j["cartan"] = matrix_json(d.cartan());
    j["longest_word"] = w0.word;
    j["star"] = w0.star;
    print(j);
  });

  // garside
  std::string word, word_v;
  auto* garside = app.add_subcommand("garside", "Garside left normal form of a positive braid word");
  garside->add_option("--type", type_only)->required();
  garside->add_option("--word", word, "comma-separated letters");
  on(garside, [&] {
    const CartanDatum d = CartanDatum::parse(type_only);
    const GarsideNF nf = garside_nf(d, parse_list(word));
    print(Json{{"r", nf.r}, {"factors", nf.factor_words(d)}});
  });

  auto* beq = app.add_subcommand("braid-equal", "Decide equality of two positive braid words");
  beq->add_option("--type", type_only)->required();
  beq->add_option("--u", word)->required();
  beq->add_option("--v", word_v)->required();
  on(beq, [&] {
    const CartanDatum d = CartanDatum::parse(type_only);
    print(Json{{"equal", braid_equal(d, parse_list(word), parse_list(word_v))}});
  });

  // chain, box-move, connect
  SeqArgs chain_args;
  auto* chain = app.add_subcommand("chain", "Boxes and envelopes of an admissible chain");
  chain_args.attach(chain, true, true);
  on(chain, [&] { print(chain_json(chain_args.chain())); });

  SeqArgs move_args;
  int m = 0;
  auto* bmove = app.add_subcommand("box-move", "Apply a box move to a chain");
  move_args.attach(bmove, true, true);
  bmove->add_option("--m", m, "index of the movable box")->required();
  on(bmove, [&] {
    const AdmissibleChain ch = move_args.chain();
    const AdmissibleChain moved = box_move(ch, m);
    Json j = chain_json(moved);
    j["exchange"] = move_is_exchange(ch, m);
    print(j);
  });

  SeqArgs conn_args;
  int to_c = 0;
  std::string to_moves;
  auto* conn = app.add_subcommand("connect", "Box-move path between two chains with the same range");
  conn_args.attach(conn, true, true);
  conn->add_option("--to-c", to_c)->required();
  conn->add_option("--to-moves", to_moves);
  on(conn, [&] {
    const AdmissibleChain from = conn_args.chain();
    const AdmissibleChain to = chain_from(from.seq(), to_c, parse_moves(to_moves));
    print(Json{{"path", connect_chains(from, to)}});
  });

  // lambda, lmatrix
  SeqArgs lam_args;
  int pa = 0, pb = 0;
  auto* lam = app.add_subcommand("lambda", "The pairing lambda(a, b)");
  lam_args.attach(lam, false, false);
  lam->add_option("--a", pa)->required();
  lam->add_option("--b", pb)->required();
  on(lam, [&] { print(Json{{"lambda", lambda(LambdaTable(lam_args.sequence()), pa, pb)}}); });

  SeqArgs lm_args;
  auto* lm = app.add_subcommand("lmatrix", "The matrix L of a chain (default: the chain (first, R...R))");
  lm_args.attach(lm, true, false);
  on(lm, [&] {
    const ColorSequence seq = lm_args.sequence();
    const AdmissibleChain ch = lm_args.c ? lm_args.chain() : chain_plus(seq);
    print(Json{{"L", matrix_json(L_matrix(ch))}});
  });

  // btilde, seed, mutate, verify-compat
  SeqArgs bt_args;
  auto* bt = app.add_subcommand("btilde", "Exchange matrix of a sequence, or of a chain when --c is given");
  bt_args.attach(bt, true, false);
  on(bt, [&] {
    print(exchange_json(bt_args.c ? btilde_chain(bt_args.chain()) : btilde_plus(bt_args.sequence())));
  });

  SeqArgs seed_args;
  auto* seedcmd = app.add_subcommand("seed", "Initial quantum seed of a chain");
  seed_args.attach(seedcmd, true, true);
  on(seedcmd, [&] {
    const AdmissibleChain ch = seed_args.chain();
    const QuantumSeed s = initial_seed(ch);
    Json vars = Json::array();
    for (const auto& z : s.variables()) vars.push_back(torus_json(z));
    print(Json{{"chain", chain_json(ch)}, {"L", matrix_json(s.L())}, {"B", exchange_json(s.B())}, {"variables", vars}});
  });

  SeqArgs mut_args;
  std::vector<int> at;
  auto* mut = app.add_subcommand("mutate", "Mutate the chain seed; prints one JSON line per step");
  mut_args.attach(mut, true, true);
  mut->add_option("--at", at, "mutation direction (repeatable)")->required();
  on(mut, [&] {
    QuantumSeed s = initial_seed(mut_args.chain());
    ClassicalSeed cs = classical_seed(mut_args.chain());
    bool ok = true;
    int step = 0;
    for (int k : at) {
      s = mutate(s, k);
      cs = classical_mutate(cs, k);
      const auto& z = s.variable(k);
      const bool positive = laurent_positive(z);
      ok = ok && positive;
      Json j{{"step", ++step},
             {"k", k},
             {"variable", torus_json(z)},
             {"t1", laurent_json(specialize_t1(z))},
             {"bar_invariant", z.is_bar_invariant()},
             {"positive", positive},
             {"L", matrix_json(s.L())},
             {"B", exchange_json(s.B())}};
      out << j.dump() << '\n';
    }
    if (!ok) throw VerificationFailed{};
  });

  SeqArgs vc_args;
  auto* vc = app.add_subcommand("verify-compat", "Check compatibility of (L, B) for a sequence or a chain");
  vc_args.attach(vc, true, false);
  on(vc, [&] {
    IntMatrix L;
    ExchangeMatrix B;
    if (vc_args.c) {
      const AdmissibleChain ch = vc_args.chain();
      L = L_matrix(ch);
      B = btilde_chain(ch);
    } else {
      const ColorSequence seq = vc_args.sequence();
      L = lambda_sequence(LambdaTable(seq));
      B = btilde_plus(seq);
    }
    const CompatibilityReport rep = check_compatible(L, B);
    print(Json{{"compatible", rep.compatible},
               {"L", matrix_json(L)},
               {"B", exchange_json(B)},
               {"products", matrix_json(rep.products)}});
    if (!rep.compatible) throw VerificationFailed{};
  });

  SeqArgs ts_args;
  std::string box_text;
  auto* ts = app.add_subcommand("verify-tsystem", "Verify the T-system identity at an i-box");
  ts_args.attach(ts, false, false);
  ts->add_option("--box", box_text, "a,b")->required();
  on(ts, [&] {
    const std::vector<int> ab = parse_list(box_text);
    if (ab.size() != 2) throw CLI::ValidationError("--box", "expected a,b");
    const TSystemReport rep = verify_tsystem(ts_args.sequence(), IBox{ab[0], ab[1]});
    Json neighbours = Json::array();
    for (std::size_t i = 0; i < rep.neighbour_boxes.size(); ++i) {
      neighbours.push_back(Json{{"color", rep.neighbour_colors[i]},
                                {"box", box_json(rep.neighbour_boxes[i])},
                                {"index", rep.neighbour_indices[i]}});
    }
    print(Json{{"box", box_json(rep.box)},
               {"chain", chain_json(rep.chain)},
               {"k0", rep.k0},
               {"mutated_box", box_json(rep.mutated_box)},
               {"partner_box", box_json(rep.partner_box)},
               {"whole_index", rep.whole_index},
               {"inner_index", rep.inner_index},
               {"neighbours", neighbours},
               {"classical_lhs", laurent_json(rep.classical_lhs)},
               {"classical_rhs", laurent_json(rep.classical_rhs)},
               {"quantum_lhs", torus_json(rep.quantum_lhs)},
               {"quantum_rhs", torus_json(rep.quantum_rhs)},
               {"classical_pass", rep.classical_pass},
               {"quantum_pass", rep.quantum_pass},
               {"bar_invariant", rep.bar_invariant},
               {"specialization_pass", rep.specialization_pass},
               {"pass", rep.pass()}});
    if (!rep.pass()) throw VerificationFailed{};
  });

  // pbw-move
  std::string kind, exps, pbw_seq, pbw_type;
  int pk = 0;
  bool pbw_json = false;
  auto* pbw = app.add_subcommand("pbw-move", "Transform a PBW exponent vector under a sequence move");
  pbw->add_option("--kind", kind)->required()->check(CLI::IsMember({"beta", "gamma"}));
  pbw->add_option("--k", pk)->required();
  pbw->add_option("--exps", exps)->required();
  pbw->add_option("--seq", pbw_seq, "optional sequence used to validate the move");
  pbw->add_option("--type", pbw_type);
  pbw->add_flag("--json", pbw_json);
  on(pbw, [&] {
    const std::vector<int> values = parse_list(exps);
    const ExponentVector x = ExponentVector::from_dense(values);
    ExponentVector y;
    if (!pbw_seq.empty()) {
      SeqArgs sa;
      sa.seq = pbw_seq;
      sa.type = pbw_type;
      const ColorSequence seq = sa.sequence();
      y = kind == "beta" ? beta_transform(seq, x, pk) : gamma_transform(seq, x, pk);
    } else {
      const int span = kind == "beta" ? 3 : 2;
      if (pk < 1 || pk + span - 1 > static_cast<int>(values.size())) {
        throw CLI::ValidationError("--k", "move window leaves the exponent vector");
      }
      y = kind == "beta" ? beta_transform(x, pk) : gamma_transform(x, pk);
    }
    const std::vector<int> dense = y.to_dense(1, static_cast<int>(values.size()));
    if (pbw_json || format == "table") {
      print(Json(dense));
    } else {
      out << word_to_string(dense) << '\n';
    }
  });

  // sweep-positivity
  int sweep_len = 8, sweep_trials = 100;
  std::uint64_t sweep_rng = acceptance::kDefaultRngSeed;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep-positivity", "Random mutation sweep checking exact division and positivity");
  sweep->add_option("--len", sweep_len, "maximal mutation sequence length");
  sweep->add_option("--trials", sweep_trials);
  sweep->add_option("--rng", sweep_rng);
  sweep->add_flag("--json", sweep_json);
  on(sweep, [&] {
    acceptance::Options opt;
    opt.rng_seed = sweep_rng;
    const acceptance::SweepReport rep = acceptance::positivity_sweep(sweep_len, sweep_trials, opt);
    Json ce = Json::array();
    for (const auto& c : rep.counterexamples) ce.push_back(Json::parse(c));
    print(Json{{"trials", rep.trials},
               {"mutations", rep.mutations},
               {"max_terms", rep.max_terms},
               {"failures", rep.failures},
               {"counterexamples", ce},
               {"pass", rep.failures.empty()}});
    if (!rep.failures.empty()) throw VerificationFailed{};
  });

  // acceptance
  std::vector<std::string> only;
  std::uint64_t acc_rng = acceptance::kDefaultRngSeed;
  bool timing = false;
  auto* acc = app.add_subcommand("acceptance", "Run the acceptance suites");
  acc->add_option("--only", only, "suite id or number (repeatable)");
  acc->add_option("--rng", acc_rng);
  acc->add_flag("--timing", timing, "include wall-clock seconds in the report");
  on(acc, [&] {
    acceptance::Options opt;
    opt.rng_seed = acc_rng;
    Json suites = Json::array();
    bool all = true;
    for (const auto& info : acceptance::suites()) {
      if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end() &&
          std::find(only.begin(), only.end(), std::to_string(info.number)) == only.end()) {
        continue;
      }
      const acceptance::SuiteResult r = acceptance::run_suite(info.id, opt);
      Json j{{"number", r.number}, {"id", r.id},           {"title", r.title},
             {"pass", r.pass()},   {"correct", r.correct}, {"within_budget", r.within_budget},
             {"checks", r.checks}, {"budget_seconds", r.budget_seconds}};
      if (timing) j["seconds"] = r.seconds;
      if (!r.detail.empty()) j["detail"] = r.detail;
      if (!r.counterexample.empty()) j["counterexample"] = Json::parse(r.counterexample);
      suites.push_back(j);
      all = all && r.pass();
    }
    if (suites.empty()) throw CLI::ValidationError("--only", "no suite matches");
    print(Json{{"rng_seed", acc_rng}, {"suites", suites}, {"pass", all}});
    if (!all) throw VerificationFailed{};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const AlgebraError& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace qbc::cli
