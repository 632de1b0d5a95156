#include "qbc/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "qbc/braid.hpp"
#include "qbc/cluster.hpp"
#include "qbc/error.hpp"
#include "qbc/exchange.hpp"
#include "qbc/ibox.hpp"
#include "qbc/pairing.hpp"
#include "qbc/pbw.hpp"

namespace qbc::acceptance {

int thread_count(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("QBC_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::min(std::max(1, threads), std::max(1, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

namespace {

// Collects check counts and the first failure; safe to share across workers.
class Tally {
 public:
  void ok(long long n = 1) { checks_ += n; }
  void expect(bool cond, const std::function<std::string()>& what) {
    ++checks_;
    if (!cond) record(what());
  }
  void record(const std::string& what, const std::string& artifact = "") {
    std::lock_guard<std::mutex> lock(mu_);
    ++failures_;
    if (first_.empty()) {
      first_ = what;
      artifact_ = artifact;
    }
  }
  long long checks() const { return checks_; }
  bool clean() const { return failures_ == 0; }
  std::string first() const { return failures_ ? first_ + " (" + std::to_string(failures_) + " failures)" : ""; }
  const std::string& artifact() const { return artifact_; }

 private:
  std::atomic<long long> checks_{0};
  std::atomic<long long> failures_{0};
  std::mutex mu_;
  std::string first_;
  std::string artifact_;
};

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::vector<std::vector<int>> all_sequences(int rank, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int c = 1; c <= rank; ++c) {
        auto v = w;
        v.push_back(c);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

struct Instance {
  CartanDatum datum;
  std::vector<int> colors;
};

std::string describe(const Instance& in) { return in.datum.name() + " (" + word_to_string(in.colors) + ")"; }

// A2 and A3 exhaustive up to max_len, plus `randoms` random D4 sequences.
std::vector<Instance> standard_sequences(int max_len, int randoms, std::uint64_t seed) {
  std::vector<Instance> out;
  for (const char* name : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (auto& w : all_sequences(d.rank(), max_len)) out.push_back({d, std::move(w)});
  }
  const CartanDatum d4 = CartanDatum::parse("D4");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < randoms; ++t) {
    std::vector<int> w(uniform(rng, 1, max_len));
    for (int& c : w) c = static_cast<int>(uniform(rng, 1, 4));
    out.push_back({d4, std::move(w)});
  }
  return out;
}

std::vector<int> sigma(int n, int k) { return adjacent_transposition(n, k - 1); }

template <typename Fn>
void guarded(Tally& tally, const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    tally.record(where + ": " + e.what());
  }
}

// --- 1 ---------------------------------------------------------------------
void suite_compat(Tally& tally, const Options& opt) {
  const auto inst = standard_sequences(7, 500, opt.rng_seed);
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    guarded(tally, describe(in), [&] {
      const ColorSequence seq(in.datum, in.colors);
      const LambdaTable table(seq);
      const CompatibilityReport rep = check_compatible(lambda_sequence(table), btilde_plus(seq));
      tally.expect(rep.compatible, [&] { return "incompatible pair for " + describe(in) + ": " + rep.products.to_string(); });
    });
  });
}

// --- 2 ---------------------------------------------------------------------
void suite_transport(Tally& tally, const Options& opt) {
  const auto inst = standard_sequences(7, 500, opt.rng_seed);
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    guarded(tally, describe(in), [&] {
      const ColorSequence seq(in.datum, in.colors);
      const int n = seq.size();
      const ExchangeMatrix B = btilde_plus(seq);
      const IntMatrix L = lambda_sequence(LambdaTable(seq));
      for (int k = 1; k + 1 <= n; ++k) {
        if (in.datum.distance(in.colors[k - 1], in.colors[k]) <= 1) continue;
        const ColorSequence moved(in.datum, gamma_move(in.datum, in.colors, k));
        const auto s = sigma(n, k);
        tally.expect(btilde_plus(moved) == permuted(B, s),
                     [&] { return "gamma transport of B fails at k=" + std::to_string(k) + " for " + describe(in); });
        tally.expect(lambda_sequence(LambdaTable(moved)) == permuted(L, s),
                     [&] { return "gamma transport of Lambda fails at k=" + std::to_string(k) + " for " + describe(in); });
      }
      for (int k = 1; k + 2 <= n; ++k) {
        if (in.colors[k - 1] != in.colors[k + 1] || in.datum.distance(in.colors[k - 1], in.colors[k]) != 1) continue;
        const ColorSequence moved(in.datum, beta_move(in.datum, in.colors, k));
        const auto s = sigma(n, k + 1);
        tally.expect(btilde_plus(moved) == permuted(mutate_B(B, k), s),
                     [&] { return "beta transport of B fails at k=" + std::to_string(k) + " for " + describe(in); });
        tally.expect(lambda_sequence(LambdaTable(moved)) == permuted(mutate_L(L, B, k), s),
                     [&] { return "beta transport of Lambda fails at k=" + std::to_string(k) + " for " + describe(in); });
      }
    });
  });
}

// --- 3 ---------------------------------------------------------------------
void suite_boxmove(Tally& tally, const Options& opt) {
  const auto inst = standard_sequences(6, 0, opt.rng_seed);
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    guarded(tally, describe(in), [&] {
      const ColorSequence seq(in.datum, in.colors);
      const LambdaTable table(seq);
      for (int a = seq.first(); a <= seq.last(); ++a)
        for (int b = a; b <= seq.last(); ++b)
          for (const AdmissibleChain& chain : chains_with_range(seq, a, b)) {
            const ExchangeMatrix B = btilde_chain(chain);
            const IntMatrix L = L_matrix(table, chain);
            const std::string where = describe(in) + " chain (" + std::to_string(chain.start()) + "," +
                                      moves_to_string(chain.moves()) + ")";
            tally.expect(check_compatible(L, B).compatible, [&] { return "incompatible chain seed " + where; });
            for (int m = 1; m < chain.length(); ++m) {
              if (!chain.movable(m)) continue;
              const AdmissibleChain moved = box_move(chain, m);
              const ExchangeMatrix B2 = btilde_chain(moved);
              const IntMatrix L2 = L_matrix(table, moved);
              if (move_is_exchange(chain, m)) {
                tally.expect(B2 == mutate_B(B, m) && L2 == mutate_L(L, B, m),
                             [&] { return "box move at " + std::to_string(m) + " is not mu_m for " + where; });
              } else {
                const auto s = sigma(chain.length(), m);
                tally.expect(B2 == permuted(B, s) && L2 == permuted(L, s),
                             [&] { return "box move at " + std::to_string(m) + " is not sigma_m for " + where; });
              }
            }
          }
    });
  });
}

// --- 4 ---------------------------------------------------------------------
void suite_tsystem(Tally& tally, const Options& opt) {
  const auto inst = standard_sequences(6, 0, opt.rng_seed);
  std::atomic<long long> instances{0};
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    const ColorSequence seq(in.datum, in.colors);
    for (int a = seq.first(); a <= seq.last(); ++a) {
      for (int b = a + 1; b <= seq.last(); ++b) {
        if (seq.color(a) != seq.color(b)) continue;
        const IBox box{a, b};
        guarded(tally, describe(in) + " box " + box.to_string(), [&] {
          const TSystemReport rep = verify_tsystem(seq, box);
          ++instances;
          tally.expect(rep.classical_pass, [&] {
            return "classical T-system fails for " + describe(in) + " " + box.to_string() + ": " +
                   rep.classical_lhs.to_string() + " vs " + rep.classical_rhs.to_string();
          });
          tally.expect(rep.quantum_pass, [&] {
            return "quantum T-system fails for " + describe(in) + " " + box.to_string() + ": " +
                   rep.quantum_lhs.to_string() + " vs " + rep.quantum_rhs.to_string();
          });
          tally.expect(rep.bar_invariant && rep.specialization_pass,
                       [&] { return "mutated variable check fails for " + describe(in) + " " + box.to_string(); });
        });
      }
    }
  });
  tally.expect(instances >= 200, [&] { return "only " + std::to_string(instances.load()) + " T-system instances"; });
}

// --- 5, 6 ------------------------------------------------------------------
struct Trial {
  Instance instance;
  int c = 0;
  MoveWord moves;
  std::vector<int> mutations;
};

std::string trial_json(const Trial& t) {
  std::ostringstream os;
  os << "{\"type\":\"" << t.instance.datum.name() << "\",\"seq\":[" << word_to_string(t.instance.colors)
     << "],\"c\":" << t.c << ",\"moves\":\"" << moves_to_string(t.moves) << "\",\"mutations\":["
     << word_to_string(t.mutations) << "]}";
  return os.str();
}

Trial random_trial(std::uint64_t seed, int index, int max_len = 8) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
  for (;;) {
    const CartanDatum d = CartanDatum::parse(uniform(rng, 0, 1) ? "A3" : "A2");
    std::vector<int> w(uniform(rng, 2, 6));
    for (int& c : w) c = static_cast<int>(uniform(rng, 1, static_cast<std::uint64_t>(d.rank())));
    const ColorSequence seq(d, w);
    MoveWord h(w.size() - 1);
    int lefts = 0;
    for (Move& m : h) {
      m = uniform(rng, 0, 1) ? Move::R : Move::L;
      lefts += m == Move::L;
    }
    const AdmissibleChain chain = chain_from(seq, 1 + lefts, h);
    const std::vector<int> ex = btilde_chain(chain).exchangeable_indices();
    if (ex.empty()) continue;
    Trial t{{d, w}, chain.start(), h, {}};
    const int len = static_cast<int>(uniform(rng, 1, static_cast<std::uint64_t>(max_len)));
    for (int s = 0; s < len; ++s) t.mutations.push_back(ex[uniform(rng, 0, ex.size() - 1)]);
    return t;
  }
}

constexpr int kTrials = 1000;

void suite_laurent(Tally& tally, const Options& opt) {
  const SweepReport rep = positivity_sweep(8, kTrials, opt);
  tally.ok(rep.mutations);
  for (std::size_t i = 0; i < rep.failures.size(); ++i) tally.record(rep.failures[i], rep.counterexamples[i]);
}

void suite_involution(Tally& tally, const Options& opt) {
  parallel_for(kTrials, thread_count(opt.threads), [&](int idx) {
    const Trial t = random_trial(opt.rng_seed, idx);
    try {
      const AdmissibleChain chain = chain_from(ColorSequence(t.instance.datum, t.instance.colors), t.c, t.moves);
      QuantumSeed seed = initial_seed(chain);
      ClassicalSeed classical = classical_seed(chain);
      for (int k : t.mutations) {
        const QuantumSeed next = mutate(seed, k);
        tally.expect(mutate(next, k).same_cluster(seed),
                     [&] { return "mu_k mu_k != id at k=" + std::to_string(k) + " in " + trial_json(t); });
        seed = next;
        classical = classical_mutate(classical, k);
        tally.expect(seed.B() == classical.B, [&] { return "exchange matrices diverge in " + trial_json(t); });
        for (int j = 1; j <= seed.size(); ++j) {
          tally.expect(specialize_t1(seed.variable(j)) == classical.vars[j - 1],
                       [&] { return "t=1 specialization differs at " + std::to_string(j) + " in " + trial_json(t); });
        }
      }
      tally.expect(quasi_commuting(seed), [&] { return "quasi-commutation fails in " + trial_json(t); });
    } catch (const std::exception& e) {
      tally.record(std::string("mutation failed: ") + e.what(), trial_json(t));
    }
  });
}

// --- 7 ---------------------------------------------------------------------
void suite_garside(Tally& tally, const Options& opt) {
  for (const char* name : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(name);
    const auto words = all_sequences(d.rank(), 6);
    const WeylElement w0 = WeylElement::longest(d);
    const BraidWord delta = longest_and_star(d).word;
    parallel_for(static_cast<int>(words.size()), thread_count(opt.threads), [&](int idx) {
      const BraidWord& w = words[idx];
      const std::string where = d.name() + " word (" + word_to_string(w) + ")";
      guarded(tally, where, [&] {
        const GarsideNF nf = garside_nf(d, w);
        for (int k = 1; k + 1 <= static_cast<int>(w.size()); ++k) {
          if (d.distance(w[k - 1], w[k]) > 1) {
            tally.expect(garside_nf(d, gamma_move(d, w, k)) == nf, [&] { return "gamma move changes NF of " + where; });
          }
          if (k + 2 <= static_cast<int>(w.size()) && w[k - 1] == w[k + 1] && d.distance(w[k - 1], w[k]) == 1) {
            tally.expect(garside_nf(d, beta_move(d, w, k)) == nf, [&] { return "beta move changes NF of " + where; });
          }
        }
        tally.expect(braid_equal(d, nf.to_word(d), w), [&] { return "NF does not represent " + where; });
        const auto fw = nf.factor_words(d);
        for (std::size_t s = 0; s < nf.factors.size(); ++s) {
          tally.expect(!nf.factors[s].is_identity() && !(nf.factors[s] == w0),
                       [&] { return "improper factor in NF of " + where; });
          if (s + 1 < nf.factors.size()) {
            const BraidWord pair = concat(fw[s], fw[s + 1]);
            tally.expect(braid_equal(d, meet(d, delta, pair), fw[s]),
                         [&] { return "factor " + std::to_string(s + 1) + " not left-weighted in " + where; });
          }
        }
        const DeltaComplement dc = delta_complement(d, w);
        tally.expect(braid_equal(d, concat(w, dc.y), delta_power(d, dc.m)),
                     [&] { return "w y != Delta^m for " + where; });
        if (dc.m > 0) {
          tally.expect(!is_prefix(d, w, delta_power(d, dc.m - 1)), [&] { return "m not minimal for " + where; });
        }
      });
    });
  }
}

// --- 8 ---------------------------------------------------------------------
void suite_pbw(Tally& tally, const Options& opt) {
  (void)opt;
  const CartanDatum a2 = CartanDatum::parse("A2");
  const ColorSequence base(a2, {1, 2, 1});
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y)
      for (int z = 0; z <= 6; ++z) {
        const ExponentVector v = ExponentVector::from_dense({x, y, z});
        const ExponentVector once = beta_transform(base, v, 1);
        const ColorSequence moved(a2, {2, 1, 2});
        tally.expect(beta_transform(moved, once, 1) == v, [&] {
          return "beta transform is not an involution at (" + word_to_string({x, y, z}) + ")";
        });
      }
  // Root-lattice weight under the matching sequence move, in every braid and
  // commutation window of the A2/A3 sequences up to length 5.
  for (const char* name : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (const auto& w : all_sequences(d.rank(), 5)) {
      const ColorSequence seq(d, w);
      const LambdaTable ti(seq);
      const int n = seq.size();
      auto total = [&](const LambdaTable& t, const ExponentVector& v) {
        Weight s = Weight::zero(d);
        for (const auto& [k, e] : v.entries()) s = s + t.beta(k) * e;
        return s;
      };
      for (int k = 1; k + 1 <= n; ++k) {
        const bool braid = k + 2 <= n && w[k - 1] == w[k + 1] && d.distance(w[k - 1], w[k]) == 1;
        const bool comm = d.distance(w[k - 1], w[k]) > 1;
        if (!braid && !comm) continue;
        const ColorSequence moved(d, braid ? beta_move(d, w, k) : gamma_move(d, w, k));
        const LambdaTable tj(moved);
        const int span = braid ? 3 : 2;
        std::vector<int> window(span, 0);
        for (;;) {
          std::vector<int> dense(n, 1);
          for (int s = 0; s < span; ++s) dense[k - 1 + s] = window[s];
          const ExponentVector v = ExponentVector::from_dense(dense);
          const ExponentVector v2 = braid ? beta_transform(seq, v, k) : gamma_transform(seq, v, k);
          tally.expect(total(ti, v) == total(tj, v2), [&] {
            return "root-lattice weight not preserved for " + d.name() + " (" + word_to_string(w) + ") at k=" +
                   std::to_string(k) + " with (" + word_to_string(dense) + ")";
          });
          int p = 0;
          while (p < span && window[p] == 4) window[p++] = 0;
          if (p == span) break;
          ++window[p];
        }
      }
    }
  }
}

// --- 9 ---------------------------------------------------------------------
void suite_connect(Tally& tally, const Options& opt) {
  std::vector<Instance> inst;
  for (const char* name : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (auto& w : all_sequences(d.rank(), 6))
      if (w.size() == 6 && (d.rank() == 2 || (w[0] == 1 && w[1] == 2))) inst.push_back({d, w});
  }
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    guarded(tally, describe(in), [&] {
      const ColorSequence seq(in.datum, in.colors);
      for (int a = seq.first(); a <= seq.last(); ++a)
        for (int b = a; b <= seq.last(); ++b) {
          const auto chains = chains_with_range(seq, a, b);
          tally.expect(chains.size() == (1u << (b - a)), [&] { return "wrong chain count"; });
          for (const auto& from : chains)
            for (const auto& to : chains) {
              AdmissibleChain cur = from;
              for (int m : connect_chains(from, to)) cur = box_move(cur, m);
              tally.expect(cur == to && cur.boxes() == to.boxes(), [&] {
                return "replayed path misses target over " + describe(in) + " range [" + std::to_string(a) + "," +
                       std::to_string(b) + "]";
              });
            }
        }
    });
  });
}

// --- 10 --------------------------------------------------------------------
void suite_crossform(Tally& tally, const Options& opt) {
  const auto inst = standard_sequences(7, 500, opt.rng_seed);
  parallel_for(static_cast<int>(inst.size()), thread_count(opt.threads), [&](int idx) {
    const Instance& in = inst[idx];
    guarded(tally, describe(in), [&] {
      const ColorSequence seq(in.datum, in.colors);
      const LambdaTable table(seq);
      std::vector<IBox> boxes;
      for (int a = seq.first(); a <= seq.last(); ++a)
        for (int b = a; b <= seq.last(); ++b)
          if (seq.color(a) == seq.color(b)) boxes.push_back({a, b});
      for (const IBox& inner : boxes)
        for (const IBox& outer : boxes) {
          if (!nesting_hypothesis(seq, inner, outer) || !boxes_commute(seq, inner, outer)) continue;
          const int wf = lambda_weight_form(table, inner, outer);
          const int lb = lambda_box(table, inner, outer);
          tally.expect(wf == lb, [&] {
            return "weight form " + std::to_string(wf) + " != lambda sum " + std::to_string(lb) + " for " +
                   inner.to_string() + "," + outer.to_string() + " in " + describe(in);
          });
        }
    });
  });
}

using SuiteFn = void (*)(Tally&, const Options&);

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{1, "compat", "compatibility of (Lambda, B) for sequences", 30}, suite_compat},
      {{2, "transport", "move transport of B and Lambda", 30}, suite_transport},
      {{3, "boxmove", "box move versus mutation on chain seeds", 60}, suite_boxmove},
      {{4, "tsystem", "T-system exchange identity", 120}, suite_tsystem},
      {{5, "laurent", "quantum Laurent phenomenon and positivity", 300}, suite_laurent},
      {{6, "involution", "mutation involution and t=1 specialization", 120}, suite_involution},
      {{7, "garside", "Garside normal form, meet and Delta complement", 60}, suite_garside},
      {{8, "pbw", "PBW braid-move involution and root weight", 10}, suite_pbw},
      {{9, "connect", "box-move connectivity of same-range chains", 30}, suite_connect},
      {{10, "crossform", "weight form versus lambda sum", 30}, suite_crossform},
  };
  return entries;
}

}  // namespace

SweepReport positivity_sweep(int max_len, int trials, const Options& options) {
  if (max_len < 1 || trials < 0) fail(ErrorCode::kIndexOutOfRange, "sweep needs max_len >= 1 and trials >= 0");
  SweepReport rep;
  rep.trials = trials;
  std::mutex mu;
  parallel_for(trials, thread_count(options.threads), [&](int idx) {
    const Trial t = random_trial(options.rng_seed, idx, max_len);
    long long done = 0;
    std::size_t terms = 0;
    std::string failure;
    try {
      const AdmissibleChain chain = chain_from(ColorSequence(t.instance.datum, t.instance.colors), t.c, t.moves);
      QuantumSeed seed = initial_seed(chain);
      for (int k : t.mutations) {
        seed = mutate(seed, k);
        ++done;
        terms = std::max(terms, seed.variable(k).size());
        if (!laurent_positive(seed.variable(k))) {
          failure = "negative coefficient in " + seed.variable(k).to_string() + " after " + word_to_string(seed.history());
          break;
        }
      }
    } catch (const std::exception& e) {
      failure = std::string("mutation failed: ") + e.what();
    }
    std::lock_guard<std::mutex> lock(mu);
    rep.mutations += done;
    rep.max_terms = std::max(rep.max_terms, terms);
    if (!failure.empty()) {
      rep.failures.push_back(failure);
      rep.counterexamples.push_back(trial_json(t));
    }
  });
  return rep;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteResult run_suite(const std::string& id, const Options& options) {
  for (const auto& e : registry()) {
    if (e.info.id != id && std::to_string(e.info.number) != id) continue;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.fn(tally, options);
    } catch (const std::exception& ex) {
      tally.record(std::string("suite aborted: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    SuiteResult r;
    r.number = e.info.number;
    r.id = e.info.id;
    r.title = e.info.title;
    r.correct = tally.clean() && tally.checks() > 0;
    r.checks = tally.checks();
    r.seconds = secs;
    r.budget_seconds = e.info.budget_seconds;
    r.within_budget = secs <= e.info.budget_seconds;
    r.detail = tally.first();
    r.counterexample = tally.artifact();
    return r;
  }
  fail(ErrorCode::kInvalidType, "unknown suite '" + id + "'");
}

}  // namespace qbc::acceptance
