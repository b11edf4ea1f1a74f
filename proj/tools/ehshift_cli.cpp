// Command-line surface for the shift-graph library: construction,
// coloring, extraction, verification and the S_n recurrence, with
// reproducible machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 guard/budget violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <ehshift/coloring.hpp>
#include <ehshift/extraction.hpp>
#include <ehshift/graph.hpp>
#include <ehshift/shift.hpp>
#include <ehshift/verify.hpp>

using namespace ehshift;

namespace {

std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("EHSHIFT_OUT_DIR");
    if (dir && !path.empty() && path[0] != '/') return std::string(dir) + "/" + path;
    return path;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string resolved = resolve_out(out_path);
    std::ofstream f(resolved);
    if (!f) throw std::invalid_argument("cannot open output file: " + resolved);
    f << text;
}

struct HostSpec {
    int level = 0;
    std::string shift; // "N,k"

    ShiftGraph build() const {
        if (level > 0 && !shift.empty())
            throw CLI::ValidationError("give either a level or a shift spec, not both");
        if (level > 0) return eh_graph(level);
        if (!shift.empty()) {
            int N, k;
            char comma;
            std::istringstream ss(shift);
            if (!(ss >> N >> comma >> k) || comma != ',')
                throw CLI::ValidationError("shift spec must be N,k");
            return shift_graph(N, k);
        }
        throw CLI::ValidationError("a host graph is required (--level or --shift)");
    }
};

struct ColoringSpec {
    std::optional<std::uint64_t> seed;
    std::string file;
    std::string constant;
    std::string adversarial;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "seeded random coloring");
        cmd->add_option("--file", file, "load a coloring file");
        cmd->add_option("--constant", constant, "constant coloring, R or B");
        cmd->add_option("--adversarial", adversarial,
                        "named adversarial generator (mid-parity, sum-parity, low-threshold)");
    }

    TwoColoring build(const ShiftGraph& host) const {
        int given = (seed ? 1 : 0) + (!file.empty()) + (!constant.empty()) + (!adversarial.empty());
        if (given != 1)
            throw CLI::ValidationError("exactly one coloring source required "
                                       "(--seed | --file | --constant | --adversarial)");
        if (seed) return random_coloring(host, *seed);
        if (!constant.empty()) return constant_coloring(host, parse_color(constant));
        if (!adversarial.empty()) return named_adversarial(host, adversarial);
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open coloring file: " + file);
        return load_coloring(host, f);
    }
};

std::string render_graph(const ShiftGraph& g, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        auto j = g.descriptor();
        j["schema_version"] = 1;
        j["vertex_count"] = g.vertex_count();
        j["edge_count"] = g.edge_count();
        os << j.dump(2) << "\n";
    } else if (format == "dot") {
        write_dot(g.to_graph(), os, "shift");
    } else if (format == "edge-list") {
        write_edge_list(g.to_graph(), os);
    } else {
        throw CLI::ValidationError("unknown format '" + format + "'");
    }
    return os.str();
}

Graph load_core_graph(const HostSpec& spec, const std::string& input) {
    if (!input.empty()) {
        std::ifstream f(input);
        if (!f) throw std::invalid_argument("cannot open graph file: " + input);
        return read_edge_list(f);
    }
    return spec.build().to_graph();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Erdős–Hajnal shift graphs: construction, coloring, extraction, verification"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write primary output to a file instead of stdout")
        ->capture_default_str();

    // generate
    auto* gen = app.add_subcommand("generate", "emit a shift graph");
    HostSpec gen_host;
    std::string gen_format = "edge-list";
    gen->add_option("--level", gen_host.level, "Erdős–Hajnal level k (G_k)");
    gen->add_option("--shift", gen_host.shift, "general shift graph N,k");
    gen->add_option("--format", gen_format, "edge-list | dot | json");

    // color
    auto* col = app.add_subcommand("color", "produce edge colorings of a host");
    HostSpec col_host;
    ColoringSpec col_src;
    bool col_all = false;
    col->add_option("--level", col_host.level, "host level");
    col->add_option("--shift", col_host.shift, "host shift spec N,k");
    col_src.attach(col);
    col->add_flag("--all", col_all, "stream every coloring (hosts up to 24 edges)");

    // extract
    auto* ext = app.add_subcommand("extract", "run an extraction and emit its trace");
    HostSpec ext_host;
    ColoringSpec ext_src;
    bool ext_lemma1 = false, ext_opportunistic = false;
    int ext_t = 0, ext_k = 0;
    ext->add_option("--level", ext_host.level, "host level n (eh_graph(n))");
    ext_src.attach(ext);
    ext->add_flag("--lemma1", ext_lemma1, "Lemma-style star extraction (requires --t)");
    ext->add_option("--t", ext_t, "target level t; hypothesis n = 2^(t+1)");
    ext->add_flag("--opportunistic", ext_opportunistic, "nested pipeline with actual sizes");
    ext->add_option("--ramsey-k", ext_k, "full pipeline targeting G_k (requires a tower-sized host)");

    // verify
    auto* ver = app.add_subcommand("verify", "replay a trace against a coloring");
    HostSpec ver_host;
    ColoringSpec ver_src;
    std::string ver_trace, ver_coloring;
    ver->add_option("--trace", ver_trace, "trace JSON file")->required();
    ver->add_option("--coloring", ver_coloring, "coloring file (host inferred from the trace)");
    ver->add_option("--level", ver_host.level, "host level, for seeded/constant colorings");
    ver_src.attach(ver);

    // chi / omega
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    HostSpec chi_host;
    std::string chi_input;
    std::uint64_t chi_budget = 100'000'000ULL;
    chi->add_option("--level", chi_host.level, "host level");
    chi->add_option("--shift", chi_host.shift, "host shift spec N,k");
    chi->add_option("--input", chi_input, "edge-list file");
    chi->add_option("--budget", chi_budget, "search-node budget");

    auto* omg = app.add_subcommand("omega", "exact clique number");
    HostSpec omg_host;
    std::string omg_input;
    omg->add_option("--level", omg_host.level, "host level");
    omg->add_option("--shift", omg_host.shift, "host shift spec N,k");
    omg->add_option("--input", omg_input, "edge-list file");

    // ramsey
    auto* ram = app.add_subcommand("ramsey", "forcing checks (shift hosts or classical K_n)");
    HostSpec ram_host, ram_pattern;
    std::string ram_classical, ram_mode = "exhaustive", ram_witness_out;
    int ram_pattern_complete = 0, ram_jobs = 1;
    std::uint64_t ram_count = 100, ram_seed = 0;
    ram->add_option("--classical", ram_classical, "classical oracle: s,t,n over K_n");
    ram->add_option("--host-level", ram_host.level, "host level");
    ram->add_option("--host-shift", ram_host.shift, "host shift spec N,k");
    ram->add_option("--pattern-level", ram_pattern.level, "pattern level");
    ram->add_option("--pattern-shift", ram_pattern.shift, "pattern shift spec N,k");
    ram->add_option("--pattern-complete", ram_pattern_complete, "pattern K_n");
    ram->add_option("--mode", ram_mode, "exhaustive | sampled");
    ram->add_option("--count", ram_count, "sampled mode: number of seeded colorings");
    ram->add_option("--seed", ram_seed, "sampled mode: base seed");
    ram->add_option("--jobs", ram_jobs, "parallel workers for exhaustive sweeps");
    ram->add_option("--witness-out", ram_witness_out, "write a witness coloring file");

    // sseq
    auto* seq = app.add_subcommand("sseq", "the recurrence S_1 = 2, S_n = 2^(S_{n-1}+2)");
    std::uint64_t seq_n = 0;
    bool seq_bits = false, seq_json = false;
    seq->add_option("n", seq_n, "index")->required();
    seq->add_flag("--bits", seq_bits, "print the bit length instead of the value");
    seq->add_flag("--json", seq_json, "full report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            emit(render_graph(gen_host.build(), gen_format), out_path);
        } else if (col->parsed()) {
            ShiftGraph host = col_host.build();
            std::ostringstream os;
            if (col_all) {
                AllColorings all(host);
                for (std::uint64_t rank = 0; rank < all.size(); ++rank) {
                    save_coloring(all.at(rank), os);
                    os << "\n";
                }
            } else {
                save_coloring(col_src.build(host), os);
            }
            emit(os.str(), out_path);
        } else if (ext->parsed()) {
            if (ext_host.level <= 0) throw CLI::ValidationError("extract requires --level");
            ShiftGraph host = ext_host.build();
            TwoColoring c = ext_src.build(host);
            ExtractionTrace trace;
            if (ext_lemma1) {
                if (ext_t < 1) throw CLI::ValidationError("--lemma1 requires --t >= 1");
                trace = lemma1_extract(c, ext_t);
            } else if (ext_opportunistic) {
                trace = opportunistic_extract(c);
            } else if (ext_k > 0) {
                trace = ramsey_extract(c, ext_k);
            } else {
                throw CLI::ValidationError("choose --lemma1, --opportunistic or --ramsey-k");
            }
            emit(trace.to_json().dump(2) + "\n", out_path);
        } else if (ver->parsed()) {
            std::ifstream tf(ver_trace);
            if (!tf) throw std::invalid_argument("cannot open trace file: " + ver_trace);
            auto trace = ExtractionTrace::from_json(nlohmann::json::parse(tf));
            ShiftGraph host = trace.host_level ? eh_graph(*trace.host_level)
                                               : shift_graph(trace.host_points, 2);
            TwoColoring c = [&]() -> TwoColoring {
                if (!ver_coloring.empty()) {
                    std::ifstream f(ver_coloring);
                    if (!f) throw std::invalid_argument("cannot open coloring file: " + ver_coloring);
                    return load_coloring(host, f);
                }
                return ver_src.build(host);
            }();
            bool ok = verify_trace(c, trace);
            nlohmann::ordered_json j;
            j["schema_version"] = 1;
            j["verified"] = ok;
            emit(j.dump(2) + "\n", out_path);
            if (!ok) return 1;
        } else if (chi->parsed()) {
            Graph g = load_core_graph(chi_host, chi_input);
            emit(std::to_string(chromatic_number(g, chi_budget)) + "\n", out_path);
        } else if (omg->parsed()) {
            Graph g = load_core_graph(omg_host, omg_input);
            emit(std::to_string(clique_number(g)) + "\n", out_path);
        } else if (ram->parsed()) {
            RamseyVerdict v;
            std::optional<std::string> witness_path;
            if (!ram_classical.empty()) {
                int s, t, n;
                char c1, c2;
                std::istringstream ss(ram_classical);
                if (!(ss >> s >> c1 >> t >> c2 >> n) || c1 != ',' || c2 != ',')
                    throw CLI::ValidationError("--classical wants s,t,n");
                v = classical_ramsey(s, t, n);
                if (v.witness_rank && !ram_witness_out.empty()) {
                    std::string resolved = resolve_out(ram_witness_out);
                    std::ofstream f(resolved);
                    f << "c host complete n=" << n << "\n";
                    for (auto [a, b, col] : classical_witness_edges(n, *v.witness_rank))
                        f << "e " << a << " " << b << " " << color_char(col) << "\n";
                    witness_path = resolved;
                }
            } else {
                ShiftGraph host = ram_host.build();
                Graph pattern = ram_pattern_complete > 0 ? complete_graph(ram_pattern_complete)
                                                         : ram_pattern.build().to_graph();
                std::optional<SampledMode> sampled;
                if (ram_mode == "sampled") sampled = SampledMode{ram_count, ram_seed};
                else if (ram_mode != "exhaustive")
                    throw CLI::ValidationError("--mode must be exhaustive or sampled");
                v = ramsey_check(host, pattern, sampled, ram_jobs);
                if (v.witness_coloring && !ram_witness_out.empty()) {
                    std::string resolved = resolve_out(ram_witness_out);
                    std::ofstream f(resolved);
                    save_coloring(*v.witness_coloring, f);
                    witness_path = resolved;
                }
            }
            emit(v.to_json(witness_path).dump(2) + "\n", out_path);
        } else if (seq->parsed()) {
            TowerReport r = tower_report(seq_n);
            std::string text;
            if (seq_json) text = r.to_json().dump(2);
            else if (seq_bits)
                text = r.bit_length ? r.bit_length->to_string() : ("unknown; " + r.symbolic);
            else
                text = r.exact ? r.exact->to_string() : r.symbolic;
            emit(text + "\n", out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
