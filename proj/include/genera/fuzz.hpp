#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genera/cltp.hpp"
#include "genera/generic.hpp"
#include "genera/io.hpp"
#include "genera/oracles.hpp"
#include "genera/random_gen.hpp"
#include "genera/supports.hpp"

namespace genera {

struct FuzzConfig {
    std::string suite;
    ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
    long long trials = 100;
    int max_vertices = 7;
    std::uint64_t seed = 1;
    long long only_trial = -1; // when >= 0, run exactly this trial
    int ext_cap = 4;           // 0-extension cap where a suite needs one
    int u_cap = 4;             // base-size cap for disjoint-extension counting

    std::string replay_command(long long trial) const {
        std::ostringstream os;
        os << "genera fuzz --suite " << suite << " --spec " << spec.str() << " --trials " << trials
           << " --max-vertices " << max_vertices << " --seed " << seed << " --ext-cap " << ext_cap
           << " --u-cap " << u_cap << " --only-trial " << trial;
        return os.str();
    }
};

/// One generated test case: structures plus marked subsets and integer
/// parameters; the suite's checker interprets them.  Shrinking deletes
/// vertices and edges while the checker keeps failing; a checker faced with
/// an instance its interpretation no longer fits reports a pass, which
/// simply rejects that shrink.
struct Instance {
    std::vector<NamedStructure> structures;
    std::vector<std::pair<int, VertexSet>> sets;
    std::vector<long long> params;

    std::string text() const {
        std::string out;
        for (const auto& ns : structures) out += format_structure(ns.structure, ns.name);
        for (auto [idx, mask] : sets)
            out += "set on=" + structures[idx].name + " " + set_str(mask) + "\n";
        if (!params.empty()) {
            out += "params";
            for (long long p : params) out += " " + std::to_string(p);
            out += "\n";
        }
        return out;
    }
};

using CheckFn = std::function<std::optional<std::string>(const Instance&, const FuzzConfig&)>;
using GenerateFn = std::function<Instance(Rng&, const FuzzConfig&)>;

struct Suite {
    std::string description;
    GenerateFn generate;
    CheckFn check;
};

struct FuzzFailure {
    long long trial = 0;
    std::string message;
    Instance minimized;
    std::string replay;
};

struct FuzzReport {
    FuzzConfig config;
    long long trials_run = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const { return failures.empty(); }

    std::string str(bool porcelain = false) const {
        std::ostringstream os;
        if (porcelain) {
            os << "suite=" << config.suite << " spec=" << config.spec.str() << " seed=" << config.seed
               << " trials=" << trials_run << " failures=" << failures.size() << "\n";
            for (const auto& f : failures) {
                os << "trial=" << f.trial << " status=FAIL message=" << f.message << "\n";
                os << "replay=" << f.replay << "\n";
            }
        } else {
            os << "suite " << config.suite << " (spec " << config.spec.str() << ", seed " << config.seed
               << "): " << trials_run << " trials, " << failures.size() << " failure(s)\n";
            for (const auto& f : failures) {
                os << "trial " << f.trial << " FAILED: " << f.message << "\n";
                os << "minimized counterexample:\n" << f.minimized.text();
                os << "replay: " << f.replay << "\n";
            }
        }
        return os.str();
    }
};

namespace fuzz_detail {

/// Greedy shrink: drop vertices (highest first), then edges, as long as the
/// checker still reports the failure; repeats to a fixed point and
/// re-verifies the result before returning it.
inline Instance shrink(const Suite& suite, const FuzzConfig& cfg, Instance inst) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < inst.structures.size(); ++j) {
            for (int v = inst.structures[j].structure.size() - 1; v >= 0; --v) {
                Instance cand = inst;
                cand.structures[j].structure = remove_vertex(cand.structures[j].structure, v);
                for (auto& [idx, mask] : cand.sets)
                    if (idx == static_cast<int>(j)) mask = mask_without_vertex(mask, v);
                bool still_fails = false;
                try {
                    still_fails = suite.check(cand, cfg).has_value();
                } catch (const std::exception&) {
                    still_fails = false;
                }
                if (still_fails) {
                    inst = std::move(cand);
                    changed = true;
                }
            }
        }
        for (std::size_t j = 0; j < inst.structures.size(); ++j) {
            const Structure& s = inst.structures[j].structure;
            for (int u = 0; u < s.size(); ++u) {
                for (int v = u + 1; v < s.size(); ++v) {
                    if (!s.has_edge(u, v)) continue;
                    Instance cand = inst;
                    cand.structures[j].structure.remove_edge(u, v);
                    bool still_fails = false;
                    try {
                        still_fails = suite.check(cand, cfg).has_value();
                    } catch (const std::exception&) {
                        still_fails = false;
                    }
                    if (still_fails) {
                        inst = std::move(cand);
                        changed = true;
                    }
                }
            }
        }
    }
    return inst;
}

inline Structure random_graph(Rng& rng, int max_vertices, double edge_p = 0.4,
                              bool with_partition = false, int block_bound = 3) {
    int n = rand_int(rng, 0, max_vertices);
    Structure s(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_chance(rng, edge_p)) s.add_edge(u, v);
    if (with_partition && n > 0) {
        std::vector<int> blocks(n);
        std::vector<int> sizes;
        for (int v = 0; v < n; ++v) {
            bool joined = false;
            if (!sizes.empty() && rand_chance(rng, 0.4)) {
                int b = rand_int(rng, 0, static_cast<int>(sizes.size()) - 1);
                if (sizes[b] + 1 < block_bound) {
                    blocks[v] = b;
                    ++sizes[b];
                    joined = true;
                }
            }
            if (!joined) {
                blocks[v] = static_cast<int>(sizes.size());
                sizes.push_back(1);
            }
        }
        s.set_partition(blocks);
    }
    return s;
}

inline const Structure& the(const Instance& inst, std::size_t i) { return inst.structures[i].structure; }

inline std::optional<std::string> pass() { return std::nullopt; }

const std::map<std::string, Suite>& registry();

} // namespace fuzz_detail

/// Runs a named suite over seeded trials; failures carry a minimized
/// counterexample and an exact replay command.  Identical configurations
/// produce bit-identical reports.
inline FuzzReport run_suite(const FuzzConfig& cfg) {
    const auto& reg = fuzz_detail::registry();
    auto it = reg.find(cfg.suite);
    if (it == reg.end()) {
        std::string names;
        for (const auto& [k, v] : reg) names += (names.empty() ? "" : ", ") + k;
        throw InputError("unknown suite '" + cfg.suite + "' (available: " + names + ")");
    }
    const Suite& suite = it->second;
    FuzzReport report;
    report.config = cfg;
    long long lo = 0, hi = cfg.trials;
    if (cfg.only_trial >= 0) {
        lo = cfg.only_trial;
        hi = cfg.only_trial + 1;
    }
    for (long long trial = lo; trial < hi; ++trial) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        Instance inst = suite.generate(rng, cfg);
        std::optional<std::string> msg;
        try {
            msg = suite.check(inst, cfg);
        } catch (const std::exception& e) {
            msg = std::string("checker error: ") + e.what();
        }
        ++report.trials_run;
        if (msg) {
            FuzzFailure f;
            f.trial = trial;
            f.message = *msg;
            f.minimized = fuzz_detail::shrink(suite, cfg, inst);
            // a shrink must still fail; fall back to the original otherwise
            try {
                if (!suite.check(f.minimized, cfg).has_value()) f.minimized = inst;
            } catch (const std::exception&) {
                f.minimized = inst;
            }
            f.replay = cfg.replay_command(trial);
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : fuzz_detail::registry()) out.push_back(k);
    return out;
}

} // namespace genera

#include "genera/fuzz_suites.hpp"
