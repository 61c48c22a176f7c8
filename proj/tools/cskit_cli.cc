// Copyright 2026 The cskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cskit command-line driver. Every subcommand writes one CSV table preceded
// by a '#' header that echoes the resolved configuration.

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cskit/cskit.h"

namespace {

constexpr int kUsageExit = 2;
constexpr int kFailureExit = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(cskit_status s, const std::string &what) {
    if (s != CSKIT_OK) {
        throw ApiError(what + ": " + cskit_status_string(s) + ": " + cskit_last_error());
    }
}

std::string num(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// "start:stop:step", "a,b,c" or a single value.
std::vector<double> parse_grid(const std::string &text, const std::string &name) {
    auto to_double = [&](const std::string &s) {
        double v = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw UsageError("--" + name + ": cannot parse '" + s + "'");
        }
        return v;
    };
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) {
            parts.push_back(p);
        }
        if (parts.size() != 3) {
            throw UsageError("--" + name + ": expected start:stop:step");
        }
        double start = to_double(parts[0]), stop = to_double(parts[1]), step = to_double(parts[2]);
        if (step <= 0.0) {
            throw UsageError("--" + name + ": step must be positive");
        }
        for (long k = 0;; ++k) {
            double v = start + static_cast<double>(k) * step;
            if (v > stop + 1e-9 * step) {
                break;
            }
            out.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');) {
            if (!p.empty()) {
                out.push_back(to_double(p));
            }
        }
    }
    if (out.empty()) {
        throw UsageError("--" + name + ": empty grid '" + text + "'");
    }
    return out;
}

std::vector<int> parse_int_grid(const std::string &text, const std::string &name) {
    std::vector<int> out;
    for (double v : parse_grid(text, name)) {
        if (v != std::floor(v)) {
            throw UsageError("--" + name + ": expected integers");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        if (!p.empty()) {
            out.push_back(p);
        }
    }
    return out;
}

const std::map<std::string, int> kResourceNames{
    {"odd-cat", CSKIT_RESOURCE_ODD_CAT},
    {"even-cat", CSKIT_RESOURCE_EVEN_CAT},
    {"sq1", CSKIT_RESOURCE_SQUEEZED_SINGLE_PHOTON},
    {"sq0", CSKIT_RESOURCE_SQUEEZED_VACUUM},
};

int resource_kind(const std::string &name) {
    auto it = kResourceNames.find(name);
    if (it == kResourceNames.end()) {
        throw UsageError("unknown resource '" + name + "' (odd-cat, even-cat, sq1, sq0)");
    }
    return it->second;
}

struct NamedInput {
    std::string name;
    cskit_input_spec spec;
};

NamedInput named_input(const std::string &name) {
    cskit_input_spec s{CSKIT_INPUT_COHERENT, 0.0, 1.0, 0.0, 0.0, 0.0};
    if (name == "coherent") {
        s.kind = CSKIT_INPUT_COHERENT;
    } else if (name == "odd-cat") {
        s.kind = CSKIT_INPUT_ODD_CAT;
    } else if (name == "even-cat") {
        s.kind = CSKIT_INPUT_EVEN_CAT;
    } else if (name == "sq1") {
        s.kind = CSKIT_INPUT_SQUEEZED_SINGLE_PHOTON;
    } else if (name == "sq0") {
        s.kind = CSKIT_INPUT_SQUEEZED_VACUUM;
    } else if (name == "biased") {
        s.kind = CSKIT_INPUT_SUPERPOSITION;
        s.mu_re = 0.5;
        s.nu_re = -std::sqrt(3.0) / 2.0;
    } else {
        throw UsageError("unknown input '" + name + "' (coherent, odd-cat, even-cat, biased, sq1, sq0)");
    }
    return {name, s};
}

// Shared knobs of every subcommand.
struct Common {
    std::string out;
    int jobs = 0;
    unsigned long long seed = 0xC57;
};

int resolve_jobs(int flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char *env = std::getenv("CSKIT_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs tasks[0..n) on a pool; rows come back in task order.
std::vector<std::string> run_pool(std::size_t n, int jobs, const std::function<std::string(std::size_t)> &task) {
    std::vector<std::string> rows(n);
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::optional<std::string> error;
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= n) {
                return;
            }
            {
                std::lock_guard<std::mutex> lock(err_mu);
                if (error) {
                    return;
                }
            }
            try {
                rows[k] = task(k);
            } catch (const std::exception &e) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) {
                    error = e.what();
                }
            }
        }
    };
    int count = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        throw ApiError(*error);
    }
    return rows;
}

struct Table {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> notes;
    std::string columns;
    std::vector<std::string> rows;
};

void emit(const std::string &command, const Common &common, int jobs, const Table &t) {
    std::ostringstream os;
    os << "# cskit " << cskit_version() << "\n";
    os << "# command=" << command << "\n";
    for (const auto &[k, v] : t.config) {
        os << "# " << k << "=" << v << "\n";
    }
    os << "# jobs=" << jobs << "\n";
    os << "# seed=" << common.seed << "\n";
    for (const auto &n : t.notes) {
        os << "# " << n << "\n";
    }
    os << t.columns << "\n";
    for (const auto &r : t.rows) {
        os << r << "\n";
    }
    if (common.out.empty() || common.out == "-") {
        std::cout << os.str();
        std::cout.flush();
        return;
    }
    // Write beside the target and rename so no partial file is left behind.
    std::string tmp = common.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ApiError("cannot open " + tmp + " for writing");
        }
        f << os.str();
        if (!f) {
            throw ApiError("write to " + tmp + " failed");
        }
    }
    if (std::rename(tmp.c_str(), common.out.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ApiError("cannot move output into " + common.out);
    }
}

std::string grid_text(const std::vector<double> &g) {
    std::string s;
    for (std::size_t k = 0; k < g.size(); ++k) {
        s += (k ? "," : "") + num(g[k]);
    }
    return s;
}

double alpha_for(double beta) {
    return beta / std::numbers::sqrt2;
}

struct SummaryGuard {
    cskit_summary *s = nullptr;
    ~SummaryGuard() {
        cskit_summary_free(s);
    }
};

// ---- approx ----

struct ApproxArgs {
    std::string kind = "odd";
    std::string beta = "0:1.5:0.01";
    int cutoff = 15;
};

Table cmd_approx(const ApproxArgs &a, int jobs) {
    std::vector<double> betas = parse_grid(a.beta, "beta");
    std::vector<std::string> kinds = a.kind == "both" ? std::vector<std::string>{"odd", "even"}
                                                      : std::vector<std::string>{a.kind};
    Table t;
    t.config = {{"kind", a.kind}, {"beta", grid_text(betas)}, {"cutoff", std::to_string(a.cutoff)}};
    t.columns = "kind,beta,r,fidelity";
    t.rows = run_pool(kinds.size() * betas.size(), jobs, [&](std::size_t k) {
        const std::string &kind = kinds[k / betas.size()];
        double beta = betas[k % betas.size()];
        double r, f;
        check(cskit_approx_fidelity(kind == "odd", beta, a.cutoff, &r, &f), "approx beta=" + num(beta));
        return kind + "," + num(beta) + "," + num(r) + "," + num(f);
    });
    return t;
}

// ---- success-prob ----

struct SuccessArgs {
    std::string families = "odd-cat,biased,coherent,even-cat";
    std::string resources = "odd-cat,sq1";
    std::string beta = "0.05:1.5:0.05";
    int cutoff = 15;
};

Table cmd_success(const SuccessArgs &a, int jobs) {
    std::vector<double> betas = parse_grid(a.beta, "beta");
    std::vector<NamedInput> fams;
    for (const auto &f : split_list(a.families)) {
        fams.push_back(named_input(f));
    }
    std::vector<std::string> res = split_list(a.resources);
    for (const auto &r : res) {
        resource_kind(r);
    }
    if (fams.empty() || res.empty()) {
        throw UsageError("empty family or resource list");
    }
    Table t;
    t.config = {{"families", a.families},
                {"resources", a.resources},
                {"beta", grid_text(betas)},
                {"cutoff", std::to_string(a.cutoff)},
                {"alpha", "beta/sqrt2"}};
    t.columns = "beta,input,resource,p_success,p_both_nonzero";
    const std::size_t per_beta = fams.size() * res.size();
    t.rows = run_pool(betas.size() * per_beta, jobs, [&](std::size_t k) {
        double beta = betas[k / per_beta];
        const NamedInput &f = fams[(k % per_beta) / res.size()];
        const std::string &r = res[k % res.size()];
        double p, both;
        check(cskit_success_probability(&f.spec, resource_kind(r), beta, a.cutoff, &p, &both),
              "success-prob beta=" + num(beta));
        return num(beta) + "," + f.name + "," + r + "," + num(p) + "," + num(both);
    });
    return t;
}

// ---- teleport ----

struct TeleportArgs {
    std::string resource = "sq1";
    std::string inputs = "sq1,sq0,coherent,odd-cat,even-cat";
    std::string beta = "0.05:1.5:0.05";
    int cutoff = 15;
    int random = 0;
    bool include_even = false;
    bool per_outcome = false;
    std::string m = "1:5:1";
};

Table cmd_teleport(const TeleportArgs &a, const Common &common, int jobs) {
    std::vector<double> betas = parse_grid(a.beta, "beta");
    int res_kind = resource_kind(a.resource);
    std::vector<NamedInput> inputs;
    for (const auto &name : split_list(a.inputs)) {
        inputs.push_back(named_input(name));
    }
    Table t;
    if (a.random < 0) {
        throw UsageError("--random must be >= 0");
    }
    std::mt19937_64 rng(common.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < a.random; ++k) {
        // Uniform on the Bloch sphere of the (non-orthogonal) coherent basis.
        double theta = std::acos(1.0 - 2.0 * u(rng));
        double phi = 2.0 * std::numbers::pi * u(rng);
        cskit_input_spec s{CSKIT_INPUT_SUPERPOSITION, 0.0, std::cos(theta / 2), 0.0,
                           std::sin(theta / 2) * std::cos(phi), std::sin(theta / 2) * std::sin(phi)};
        std::string name = "random-" + std::to_string(k);
        t.notes.push_back(name + ": mu=" + num(s.mu_re) + " nu=" + num(s.nu_re) + (s.nu_im < 0 ? "" : "+") +
                          num(s.nu_im) + "i");
        inputs.push_back({name, s});
    }
    if (inputs.empty()) {
        throw UsageError("no inputs selected");
    }
    t.config = {{"resource", a.resource},
                {"inputs", a.inputs},
                {"random", std::to_string(a.random)},
                {"beta", grid_text(betas)},
                {"cutoff", std::to_string(a.cutoff)},
                {"alpha", "beta/sqrt2"},
                {"include_even", a.include_even ? "true" : "false"}};
    if (a.per_outcome) {
        std::vector<int> ms = parse_int_grid(a.m, "m");
        t.config.push_back({"per_outcome", "true"});
        t.config.push_back({"n", "0"});
        t.config.push_back({"m", a.m});
        t.columns = "beta,input,resource,n,m,fidelity";
        const std::size_t per_beta = inputs.size() * ms.size();
        t.rows = run_pool(betas.size() * per_beta, jobs, [&](std::size_t k) {
            double beta = betas[k / per_beta];
            const NamedInput &in = inputs[(k % per_beta) / ms.size()];
            int m = ms[k % ms.size()];
            cskit_input_spec spec = in.spec;
            spec.alpha = alpha_for(beta);
            cskit_resource_spec res{res_kind, beta};
            int present;
            double f;
            check(cskit_per_outcome_fidelity(&spec, &res, m, a.cutoff, &present, &f),
                  "teleport beta=" + num(beta) + " m=" + std::to_string(m));
            return num(beta) + "," + in.name + "," + a.resource + ",0," + std::to_string(m) + "," +
                   (present ? num(f) : std::string());
        });
        return t;
    }
    t.columns = "beta,input,resource,p_success,average_fidelity_odd,degenerate";
    cskit_run_options opt{a.include_even ? 1 : 0, 0};
    t.rows = run_pool(betas.size() * inputs.size(), jobs, [&](std::size_t k) {
        double beta = betas[k / inputs.size()];
        const NamedInput &in = inputs[k % inputs.size()];
        cskit_input_spec spec = in.spec;
        spec.alpha = alpha_for(beta);
        cskit_resource_spec res{res_kind, beta};
        SummaryGuard g;
        check(cskit_run_teleportation(&spec, &res, a.cutoff, &opt, &g.s), "teleport beta=" + num(beta));
        return num(beta) + "," + in.name + "," + a.resource + "," + num(cskit_summary_success_probability(g.s)) + "," +
               num(cskit_summary_average_fidelity(g.s)) + "," + (cskit_summary_degenerate(g.s) ? "1" : "0");
    });
    return t;
}

// ---- entswap ----

struct EntswapArgs {
    std::string phi = "sq1";
    std::string resource;
    std::string beta = "0.05:1.5:0.05";
    int cutoff = 15;
    bool include_even = false;
};

Table cmd_entswap(const EntswapArgs &a, int jobs) {
    std::vector<double> betas = parse_grid(a.beta, "beta");
    std::string res_name = a.resource.empty() ? a.phi : a.resource;
    int phi_kind = resource_kind(a.phi), res_kind = resource_kind(res_name);
    Table t;
    t.config = {{"phi", a.phi},
                {"resource", res_name},
                {"beta", grid_text(betas)},
                {"cutoff", std::to_string(a.cutoff)},
                {"include_even", a.include_even ? "true" : "false"}};
    t.columns = "beta,phi,resource,p_success,average_fidelity_odd,degenerate";
    cskit_run_options opt{a.include_even ? 1 : 0, 0};
    t.rows = run_pool(betas.size(), jobs, [&](std::size_t k) {
        double beta = betas[k];
        cskit_resource_spec phi{phi_kind, beta}, res{res_kind, beta};
        SummaryGuard g;
        check(cskit_run_entanglement_swap(&phi, &res, a.cutoff, &opt, &g.s), "entswap beta=" + num(beta));
        return num(beta) + "," + a.phi + "," + res_name + "," + num(cskit_summary_success_probability(g.s)) + "," +
               num(cskit_summary_average_fidelity(g.s)) + "," + (cskit_summary_degenerate(g.s) ? "1" : "0");
    });
    return t;
}

// ---- loss ----

struct LossArgs {
    std::string protocol = "teleport";
    std::string input = "sq1";
    std::string resource = "sq1";
    double alpha = 0.5;
    double beta = 0.5;
    double eta_step = 0.05;
    double eta_start = 0.05;
    int cutoff = 0;
};

Table cmd_loss(const LossArgs &a, int jobs) {
    bool tele = a.protocol == "teleport";
    if (!tele && a.protocol != "entswap") {
        throw UsageError("--protocol must be teleport or entswap");
    }
    if (!(a.eta_step > 0.0 && a.eta_step <= 1.0) || !(a.eta_start >= 0.0 && a.eta_start <= 1.0)) {
        throw UsageError("eta grid: need 0 < step <= 1 and 0 <= start <= 1");
    }
    std::vector<double> etas;
    for (long k = 0;; ++k) {
        double v = a.eta_start + static_cast<double>(k) * a.eta_step;
        if (v > 1.0 - 1e-9) {
            break;
        }
        etas.push_back(v);
    }
    etas.push_back(1.0);
    int cutoff = a.cutoff > 0 ? a.cutoff : (tele ? 6 : 5);
    int res_kind = resource_kind(a.resource);
    NamedInput in = named_input(tele ? a.input : "coherent");
    double beta = tele ? std::numbers::sqrt2 * a.alpha : a.beta;

    Table t;
    t.config = {{"protocol", a.protocol}, {"resource", a.resource}};
    if (tele) {
        t.config.push_back({"input", a.input});
        t.config.push_back({"alpha", num(a.alpha)});
        t.config.push_back({"beta", num(beta) + " (sqrt2*alpha)"});
    } else {
        t.config.push_back({"phi", a.resource});
        t.config.push_back({"beta", num(beta)});
    }
    t.config.push_back({"eta", grid_text(etas)});
    t.config.push_back({"cutoff", std::to_string(cutoff)});
    t.columns = "slice,eta1,eta2,fidelity,p_success";

    const std::size_t n = etas.size();
    std::vector<std::string> cells = run_pool(n * n, jobs, [&](std::size_t k) {
        double e1 = etas[k / n], e2 = etas[k % n];
        SummaryGuard g;
        if (tele) {
            cskit_input_spec spec = in.spec;
            spec.alpha = a.alpha;
            cskit_resource_spec res{res_kind, beta};
            check(cskit_run_lossy_teleportation(&spec, &res, e1, e2, cutoff, nullptr, &g.s),
                  "loss eta1=" + num(e1) + " eta2=" + num(e2));
        } else {
            check(cskit_run_lossy_entswap(res_kind, beta, e1, e2, cutoff, nullptr, &g.s),
                  "loss eta1=" + num(e1) + " eta2=" + num(e2));
        }
        return num(e1) + "," + num(e2) + "," + num(cskit_summary_average_fidelity(g.s)) + "," +
               num(cskit_summary_success_probability(g.s));
    });
    for (const auto &c : cells) {
        t.rows.push_back("grid," + c);
    }
    for (std::size_t k = 0; k < n; ++k) {
        t.rows.push_back("diagonal," + cells[k * n + k]);
    }
    return t;
}

// ---- wigner ----

struct WignerArgs {
    std::string state = "odd-cat";
    std::optional<double> beta;
    std::optional<double> r;
    int n = 1;
    double range = 5.0;
    int steps = 201;
    int cutoff = 30;
};

Table cmd_wigner(const WignerArgs &a, int jobs) {
    if (!(a.range > 0.0) || !std::isfinite(a.range)) {
        throw UsageError("--range must be positive");
    }
    if (a.steps < 2) {
        throw UsageError("--steps must be >= 2");
    }
    double beta = a.beta.value_or(1.0);
    cskit_state *psi = nullptr;
    Table t;
    t.config = {{"state", a.state}};
    if (a.state == "odd-cat" || a.state == "even-cat") {
        check(cskit_state_cat(beta, a.state == "odd-cat", a.cutoff, &psi), "wigner state");
        t.config.push_back({"beta", num(beta)});
    } else if (a.state == "coherent") {
        check(cskit_state_coherent(beta, 0.0, a.cutoff, &psi), "wigner state");
        t.config.push_back({"beta", num(beta)});
    } else if (a.state == "sq1" || a.state == "sq0") {
        double r = 0.0;
        if (a.r) {
            r = *a.r;
        } else if (a.state == "sq1") {
            check(cskit_r_opt(beta, &r), "r_opt");
        } else {
            check(cskit_r_opt_v(beta, &r), "r_opt_v");
        }
        if (a.state == "sq1") {
            check(cskit_state_squeezed_single_photon(r, a.cutoff, &psi), "wigner state");
        } else {
            check(cskit_state_squeezed_vacuum(r, a.cutoff, &psi), "wigner state");
        }
        if (!a.r) {
            t.config.push_back({"beta", num(beta)});
        }
        t.config.push_back({"r", num(r)});
    } else if (a.state == "fock") {
        check(cskit_state_fock(a.n, a.cutoff, &psi), "wigner state");
        t.config.push_back({"n", std::to_string(a.n)});
    } else {
        throw UsageError("unknown state '" + a.state + "' (odd-cat, even-cat, coherent, sq1, sq0, fock)");
    }
    size_t keep = 0;
    cskit_density *rho = nullptr;
    cskit_status st = cskit_state_partial_trace(psi, 1, &keep, &rho);
    cskit_state_free(psi);
    check(st, "density matrix");
    t.config.push_back({"range", num(a.range)});
    t.config.push_back({"steps", std::to_string(a.steps)});
    t.config.push_back({"cutoff", std::to_string(a.cutoff)});
    t.columns = "x,p,w";
    const double lo = -a.range, step = 2.0 * a.range / (a.steps - 1);
    auto coord = [&](int i) { return i == a.steps - 1 ? a.range : lo + i * step; };
    try {
        t.rows = run_pool(static_cast<std::size_t>(a.steps), jobs, [&](std::size_t i) {
            std::string block;
            double x = coord(static_cast<int>(i));
            for (int j = 0; j < a.steps; ++j) {
                double p = coord(j), w;
                check(cskit_wigner_point(rho, x, p, &w), "wigner");
                if (j) {
                    block += "\n";
                }
                block += num(x) + "," + num(p) + "," + num(w);
            }
            return block;
        });
    } catch (...) {
        cskit_density_free(rho);
        throw;
    }
    cskit_density_free(rho);
    return t;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cskit: coherent-state teleportation with squeezed resources"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cskit_version()));

    Common common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out,-o", common.out, "Output CSV path (default stdout)");
        sub->add_option("--jobs,-j", common.jobs, "Worker threads (default $CSKIT_JOBS, else all cores)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", common.seed, "Seed for randomized inputs")->capture_default_str();
    };

    ApproxArgs approx;
    auto *s_approx = app.add_subcommand("approx", "Cat vs squeezed-state approximation fidelity");
    s_approx->add_option("--kind", approx.kind, "odd, even or both")
        ->check(CLI::IsMember({"odd", "even", "both"}))
        ->capture_default_str();
    s_approx->add_option("--beta", approx.beta, "Grid start:stop:step or list")->capture_default_str();
    s_approx->add_option("--cutoff", approx.cutoff)->capture_default_str();
    add_common(s_approx);

    SuccessArgs success;
    auto *s_success = app.add_subcommand("success-prob", "Teleportation success probability");
    s_success->add_option("--families", success.families, "Inputs: odd-cat,biased,coherent,even-cat,sq1,sq0")
        ->capture_default_str();
    s_success->add_option("--resources", success.resources, "Resources: odd-cat,even-cat,sq1,sq0")
        ->capture_default_str();
    s_success->add_option("--beta", success.beta)->capture_default_str();
    s_success->add_option("--cutoff", success.cutoff)->capture_default_str();
    add_common(s_success);

    TeleportArgs tele;
    auto *s_tele = app.add_subcommand("teleport", "Average or per-outcome teleportation fidelity");
    s_tele->add_option("--resource", tele.resource)->capture_default_str();
    s_tele->add_option("--inputs", tele.inputs)->capture_default_str();
    s_tele->add_option("--random", tele.random, "Extra seeded random superposition inputs")->capture_default_str();
    s_tele->add_option("--beta", tele.beta)->capture_default_str();
    s_tele->add_option("--cutoff", tele.cutoff)->capture_default_str();
    s_tele->add_flag("--include-even", tele.include_even, "Average Z outcomes too (Z tracked on the target)");
    s_tele->add_flag("--per-outcome", tele.per_outcome, "Fidelity of single outcomes (n=0, m)");
    s_tele->add_option("--m", tele.m, "Detector counts for --per-outcome")->capture_default_str();
    add_common(s_tele);

    EntswapArgs ent;
    auto *s_ent = app.add_subcommand("entswap", "Entanglement-swapping fidelity");
    s_ent->add_option("--phi", ent.phi)->capture_default_str();
    s_ent->add_option("--resource", ent.resource, "Default: same kind as --phi");
    s_ent->add_option("--beta", ent.beta)->capture_default_str();
    s_ent->add_option("--cutoff", ent.cutoff)->capture_default_str();
    s_ent->add_flag("--include-even", ent.include_even);
    add_common(s_ent);

    LossArgs loss;
    auto *s_loss = app.add_subcommand("loss", "Fidelity over source and detector transmitivities");
    s_loss->add_option("--protocol", loss.protocol, "teleport or entswap")->capture_default_str();
    s_loss->add_option("--input", loss.input, "Teleport input")->capture_default_str();
    s_loss->add_option("--resource", loss.resource, "Resource kind (also phi for entswap)")->capture_default_str();
    s_loss->add_option("--alpha", loss.alpha, "Teleport input amplitude")->capture_default_str();
    s_loss->add_option("--beta", loss.beta, "Entswap amplitude")->capture_default_str();
    s_loss->add_option("--eta-step", loss.eta_step)->capture_default_str();
    s_loss->add_option("--eta-start", loss.eta_start)->capture_default_str();
    s_loss->add_option("--cutoff", loss.cutoff, "Default 6 (teleport) or 5 (entswap)");
    add_common(s_loss);

    WignerArgs wig;
    auto *s_wig = app.add_subcommand("wigner", "Wigner function on a square grid");
    s_wig->add_option("--state", wig.state, "odd-cat, even-cat, coherent, sq1, sq0, fock")->capture_default_str();
    s_wig->add_option("--beta", wig.beta, "Amplitude (default 1)");
    s_wig->add_option("--r", wig.r, "Squeezing (default matched to --beta)");
    s_wig->add_option("--n", wig.n, "Photon number for fock")->capture_default_str();
    s_wig->add_option("--range", wig.range, "Grid covers [-range, range]^2")->capture_default_str();
    s_wig->add_option("--steps", wig.steps)->capture_default_str();
    s_wig->add_option("--cutoff", wig.cutoff)->capture_default_str();
    add_common(s_wig);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageExit;
    }

    int jobs = resolve_jobs(common.jobs);
    try {
        Table t;
        std::string name;
        if (s_approx->parsed()) {
            name = "approx";
            t = cmd_approx(approx, jobs);
        } else if (s_success->parsed()) {
            name = "success-prob";
            t = cmd_success(success, jobs);
        } else if (s_tele->parsed()) {
            name = "teleport";
            t = cmd_teleport(tele, common, jobs);
        } else if (s_ent->parsed()) {
            name = "entswap";
            t = cmd_entswap(ent, jobs);
        } else if (s_loss->parsed()) {
            name = "loss";
            t = cmd_loss(loss, jobs);
        } else {
            name = "wigner";
            t = cmd_wigner(wig, jobs);
        }
        emit(name, common, jobs, t);
    } catch (const UsageError &e) {
        std::cerr << "cskit: " << e.what() << "\n";
        return kUsageExit;
    } catch (const std::exception &e) {
        std::cerr << "cskit: " << e.what() << "\n";
        return kFailureExit;
    }
    return 0;
}
