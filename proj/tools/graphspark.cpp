// graphspark: spark/fort/zero-forcing toolkit over exact rational arithmetic.
//
// Vertex labels on the command line and in all output are 1-based; graph
// arguments accept a graph6 string, a family spec (path:5, cycle:4,
// complete:6, kbip:2,3, spider:4,1,1, friendship:3, hypercube3,
// cart:(cycle:4)x(path:2)), or a file of graph6 lines (batch mode).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphspark/connectivity.hpp"
#include "graphspark/constructions.hpp"
#include "graphspark/families.hpp"
#include "graphspark/forts.hpp"
#include "graphspark/graph6.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/matrix_io.hpp"
#include "graphspark/parallel.hpp"
#include "graphspark/verify.hpp"

using nlohmann::json;
using namespace graphspark;

namespace {

enum class Format { text, json_fmt, csv };

struct Options {
    Format format = Format::text;
    int threads = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

// ---- config file: TOML-like key=value lines --------------------------------
// Keys: threads (int), seed (unsigned), output (text|json|csv).
// Precedence: command-line flag > GRAPHSPARK_THREADS > config file > default.
void apply_config(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + " is not key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        auto bad_value = [&]() {
            return ParseError("config line " + std::to_string(lineno) + ": invalid value '" +
                              value + "' for " + key);
        };
        if (key == "threads") {
            try {
                opt.threads = std::stoi(value);
            } catch (...) {
                throw bad_value();
            }
        } else if (key == "seed") {
            try {
                opt.seed = std::stoull(value);
            } catch (...) {
                throw bad_value();
            }
            opt.seed_set = true;
        } else if (key == "output") {
            if (value == "text") opt.format = Format::text;
            else if (value == "json") opt.format = Format::json_fmt;
            else if (value == "csv") opt.format = Format::csv;
            else throw ParseError("config: unknown output format '" + value + "'");
        } else {
            throw ParseError("config: unknown key '" + key + "'");
        }
    }
}

// ---- vertex labels: 1-based outside, 0-based inside -------------------------

json set_to_json(const VertexSet& s) {
    json arr = json::array();
    for (int v : s) arr.push_back(v + 1);
    return arr;
}

VertexSet parse_vertex_set(const std::string& text) {
    VertexSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (...) {
            throw DomainError("invalid vertex label '" + tok + "'");
        }
        if (v < 1 || v > VertexSet::capacity())
            throw DomainError("vertex label out of range (1-based): '" + tok + "'");
        s.set(v - 1);
    }
    return s;
}

// ---- graph argument resolution ----------------------------------------------

struct GraphArg {
    std::vector<std::pair<std::string, Graph>> items; // (source label, graph)
    bool batch = false;
};

GraphArg resolve_graph_arg(const std::string& arg) {
    GraphArg out;
    if (FamilySpec::looks_like(arg)) {
        FamilySpec spec = FamilySpec::parse(arg);
        out.items.emplace_back(spec.str(), generate(spec));
        return out;
    }
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open graph file '" + arg + "'");
        out.batch = true;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            out.items.emplace_back(line, Graph(1)); // parsed lazily below
        }
        return out;
    }
    out.items.emplace_back(arg, parse_graph6(arg));
    return out;
}

// ---- per-command record emitters ---------------------------------------------

json spark_record(const Graph& g, SparkMethod method) {
    FortReport rep = spark(g, method);
    return json{{"spark", rep.size},
                {"fort", set_to_json(rep.minimum_fort)},
                {"method", to_string(rep.method)}};
}

void print_spark_text(const json& j, const std::string& label) {
    std::cout << label << ": spark " << j["spark"] << ", fort "
              << j["fort"].dump() << " (" << j["method"].get<std::string>() << ")\n";
}

json forts_record(const Graph& g, bool list_forts) {
    FortSequence seq = fort_sequence(g);
    json counts = json::array();
    for (int k = 2; k <= seq.n; ++k) counts.push_back(seq.counts[static_cast<std::size_t>(k)]);
    json rec{{"n", seq.n}, {"min_size", 2}, {"counts", counts}, {"total", seq.total()}};
    if (seq.n >= 1 && seq.counts[1] > 0) rec["isolated_vertex_forts"] = seq.counts[1];
    if (list_forts) {
        if (g.order() > 10) throw CapacityError("--list materializes forts and is limited to n <= 10");
        json all = json::array();
        enumerate_forts(g, [&](const VertexSet& f) { all.push_back(set_to_json(f)); });
        rec["forts"] = all;
    }
    return rec;
}

json zf_record(const Graph& g, const VertexSet& initial) {
    VertexSet closure = zf_closure(g, initial);
    return json{{"initial", set_to_json(initial)},
                {"closure", set_to_json(closure)},
                {"zero_forcing", closure == g.vertices()}};
}

int run_batch(const GraphArg& arg, Format fmt,
              const std::function<json(const Graph&)>& record) {
    long index = 0;
    for (const auto& [label, pre] : arg.items) {
        ++index;
        json rec;
        try {
            Graph g = arg.batch ? parse_graph6(label) : pre;
            rec = record(g);
            rec["input"] = label;
        } catch (const std::exception& e) {
            // batch lines fail in isolation; a single-graph argument fails hard
            if (!arg.batch) throw;
            rec = json{{"input", label}, {"error", e.what()}};
        }
        if (fmt == Format::csv) {
            std::ostringstream row;
            row << '"' << label << '"';
            if (rec.contains("error")) {
                row << ",error," << rec["error"].get<std::string>();
            } else if (rec.contains("spark")) {
                row << ',' << rec["spark"] << ",\"" << rec["fort"].dump() << '"';
            } else if (rec.contains("counts")) {
                row << ',' << rec["n"];
                for (const auto& c : rec["counts"]) row << ',' << c;
            } else if (rec.contains("closure")) {
                row << ",\"" << rec["closure"].dump() << "\"," << rec["zero_forcing"];
            }
            std::cout << row.str() << "\n";
        } else if (fmt == Format::json_fmt) {
            std::cout << rec.dump() << "\n";
        } else {
            if (rec.contains("error"))
                std::cout << label << ": error: " << rec["error"].get<std::string>() << "\n";
            else if (rec.contains("spark"))
                print_spark_text(rec, label);
            else if (rec.contains("counts"))
                std::cout << label << ": n=" << rec["n"] << " counts(s2..sn)=" << rec["counts"].dump()
                          << "\n";
            else if (rec.contains("closure"))
                std::cout << label << ": closure " << rec["closure"].dump() << " zero forcing: "
                          << (rec["zero_forcing"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

void print_matrix(const RationalMatrix& m, Format fmt) {
    if (fmt == Format::json_fmt)
        std::cout << matrix_to_json(m) << "\n";
    else
        std::cout << matrix_to_text(m);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spark, forts, zero forcing, and exact rational matrix analysis for graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Options opt;
    bool flag_json = false, flag_csv = false;
    std::string config_path;
    app.add_flag("--json", flag_json, "JSON output (one object per record)");
    app.add_flag("--csv", flag_csv, "CSV output (batch and fort sequences)");
    app.add_option("--threads", opt.threads,
                   "worker threads (default: GRAPHSPARK_THREADS or hardware)");
    app.add_option("--config", config_path, "config file with key=value lines "
                                            "(threads, seed, output)");

    // spark
    auto* cmd_spark = app.add_subcommand("spark", "minimum fort size with certificate");
    std::string spark_graph, spark_method = "bnb";
    cmd_spark->add_option("graph", spark_graph, "graph6 | family spec | file of graph6 lines")
        ->required();
    cmd_spark->add_option("--method", spark_method, "bnb | brute")
        ->check(CLI::IsMember({"bnb", "brute"}));

    // forts
    auto* cmd_forts = app.add_subcommand("forts", "fort sequence (exhaustive, n <= 16)");
    std::string forts_graph;
    bool forts_sequence = false, forts_list = false;
    cmd_forts->add_flag("--sequence", forts_sequence, "count forts by cardinality");
    cmd_forts->add_flag("--list", forts_list, "also emit the forts (n <= 10)");
    cmd_forts->add_option("graph", forts_graph, "graph6 | family spec | file")->required();

    // zf
    auto* cmd_zf = app.add_subcommand("zf", "zero forcing closure of an initial blue set");
    std::string zf_graph, zf_initial;
    cmd_zf->add_option("--initial", zf_initial, "comma-separated 1-based vertices")->required();
    cmd_zf->add_option("graph", zf_graph, "graph6 | family spec | file")->required();

    // mat
    auto* cmd_mat = app.add_subcommand("mat", "exact rational matrix analysis");
    std::string mat_op, mat_file;
    int mat_vertex = 0;
    cmd_mat->add_option("op", mat_op, "rank | spark | null | classify | generic | psd")
        ->required()
        ->check(CLI::IsMember({"rank", "spark", "null", "classify", "generic", "psd"}));
    cmd_mat->add_option("file", mat_file, "matrix file (rows of integers or p/q)")->required();
    cmd_mat->add_option("-v,--vertex", mat_vertex, "vertex for classify (1-based)");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "executable matrix constructions");
    auto* cc_fort = cmd_construct->add_subcommand("from-fort", "matrix with a prescribed fort null vector");
    std::string cf_graph, cf_fort, cf_values;
    cc_fort->add_option("--fort", cf_fort, "comma-separated 1-based fort vertices")->required();
    cc_fort->add_option("--values", cf_values, "rationals per fort vertex (default all ones)");
    cc_fort->add_option("graph", cf_graph, "graph6 | family spec")->required();
    auto* cc_bump = cmd_construct->add_subcommand("bump", "raise rank by one, preserve spark");
    std::string cb_file;
    cc_bump->add_option("file", cb_file, "matrix file")->required();
    auto* cc_border = cmd_construct->add_subcommand("border", "bordered matrix [[xAx, xA],[Ax, A]]");
    std::string cbo_file, cbo_x;
    cc_border->add_option("file", cbo_file, "matrix file")->required();
    cc_border->add_option("--x", cbo_x, "comma-separated rational vector")->required();
    cmd_construct->require_subcommand(1);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "theorem verification suites");
    std::string v_suite;
    CorpusSpec v_corpus;
    bool v_list = false;
    long v_count = 0;
    int v_max_n = 0, v_exhaustive_n = 0;
    std::uint64_t v_seed = 0;
    bool v_seed_given = false;
    std::string v_file;
    cmd_verify->add_option("suite", v_suite, "suite id (see --list) or 'all'");
    cmd_verify->add_flag("--list", v_list, "list suites");
    cmd_verify->add_option("--count", v_count, "random corpus size");
    cmd_verify->add_option("--max-n", v_max_n, "random corpus max graph/matrix order");
    cmd_verify->add_option("--exhaustive-n", v_exhaustive_n, "exhaustive corpus bound (<= 8)");
    cmd_verify
        ->add_option("--seed", [&](const std::vector<std::string>& vals) {
            v_seed = std::stoull(vals.at(0));
            v_seed_given = true;
            return true;
        }, "random seed (default 0)")
        ->type_name("UINT");
    cmd_verify->add_option("--file", v_file, "corpus file (graph6 lines; matrices for 4.2)");

    // batch
    auto* cmd_batch = app.add_subcommand("batch", "apply a command to a file of graph6 lines");
    std::string b_command, b_file, b_initial;
    cmd_batch->add_option("command", b_command, "spark | forts | zf")
        ->required()
        ->check(CLI::IsMember({"spark", "forts", "zf"}));
    cmd_batch->add_option("file", b_file, "file of graph6 lines")->required();
    cmd_batch->add_option("--initial", b_initial, "initial blue set for zf");

    // let --json/--csv/--threads/--config appear after the subcommand too
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) apply_config(config_path, opt);
        if (flag_json) opt.format = Format::json_fmt;
        if (flag_csv) opt.format = Format::csv;
        if (opt.threads == 0) opt.threads = default_thread_count();

        if (cmd_spark->parsed()) {
            GraphArg arg = resolve_graph_arg(spark_graph);
            SparkMethod m =
                spark_method == "brute" ? SparkMethod::brute_force : SparkMethod::branch_and_bound;
            return run_batch(arg, opt.format, [&](const Graph& g) { return spark_record(g, m); });
        }

        if (cmd_forts->parsed()) {
            if (!forts_sequence && !forts_list)
                throw DomainError("forts requires --sequence (and optionally --list)");
            GraphArg arg = resolve_graph_arg(forts_graph);
            return run_batch(arg, opt.format,
                             [&](const Graph& g) { return forts_record(g, forts_list); });
        }

        if (cmd_zf->parsed()) {
            GraphArg arg = resolve_graph_arg(zf_graph);
            VertexSet initial = parse_vertex_set(zf_initial);
            return run_batch(arg, opt.format, [&](const Graph& g) { return zf_record(g, initial); });
        }

        if (cmd_mat->parsed()) {
            RationalMatrix a = read_matrix_file(mat_file);
            json out;
            if (mat_op == "rank") {
                out = json{{"rank", rank(a)}, {"nullity", nullity(a)}};
            } else if (mat_op == "spark") {
                SparkCertificate c = matrix_spark(a);
                out = json{{"spark", c.spark}, {"support", set_to_json(c.support)}};
                json w = json::array();
                for (const auto& r : c.witness) w.push_back(r.str());
                out["witness"] = w;
            } else if (mat_op == "null") {
                NullBasis nb = null_basis(a);
                json basis = json::array();
                for (const auto& vec : nb.vectors) {
                    json row = json::array();
                    for (const auto& r : vec) row.push_back(r.str());
                    basis.push_back(row);
                }
                out = json{{"nullity", nb.dimension()}, {"basis", basis},
                           {"null_support", set_to_json(null_support(a))}};
            } else if (mat_op == "classify") {
                if (mat_vertex < 1) throw DomainError("classify requires -v <vertex> (1-based)");
                VertexClassification c = parter_fiedler(a, mat_vertex - 1);
                out = json{{"vertex", mat_vertex},
                           {"class", to_string(c.cls)},
                           {"nullity", c.nullity_full},
                           {"nullity_deleted", c.nullity_deleted},
                           {"matrix_nonsingular", c.matrix_nonsingular}};
            } else if (mat_op == "generic") {
                GenericNullityOptions gopt;
                if (opt.seed_set) gopt.seed = opt.seed;
                GenericNullityReport r = generic_nullity(a, gopt);
                out = json{{"nullity", r.nullity}, {"certified", r.certified}, {"note", r.note}};
            } else if (mat_op == "psd") {
                out = json{{"psd", is_positive_semidefinite(a)}};
            }
            if (opt.format == Format::json_fmt)
                std::cout << out.dump() << "\n";
            else
                std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_construct->parsed()) {
            if (cc_fort->parsed()) {
                GraphArg arg = resolve_graph_arg(cf_graph);
                if (arg.items.size() != 1) throw DomainError("from-fort takes a single graph");
                FortVectorAssignment fva;
                fva.fort = parse_vertex_set(cf_fort);
                if (!cf_values.empty()) fva.values = parse_vector(cf_values);
                print_matrix(matrix_from_fort(arg.items[0].second, fva), opt.format);
            } else if (cc_bump->parsed()) {
                print_matrix(rank_bump(read_matrix_file(cb_file)), opt.format);
            } else if (cc_border->parsed()) {
                print_matrix(border(read_matrix_file(cbo_file), parse_vector(cbo_x)), opt.format);
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (v_list) {
                for (const auto& id : verify_suites())
                    std::cout << id << "  " << verify_suite_description(id) << "\n";
                return 0;
            }
            if (v_suite.empty()) throw DomainError("verify requires a suite id or 'all'");
            v_corpus.seed = v_seed_given ? v_seed : (opt.seed_set ? opt.seed : 0);
            if (!v_file.empty()) {
                v_corpus.kind = CorpusSpec::Kind::file;
                v_corpus.path = v_file;
            } else if (v_exhaustive_n > 0) {
                v_corpus.kind = CorpusSpec::Kind::exhaustive;
                v_corpus.max_n = v_exhaustive_n;
            } else if (v_count > 0 || v_max_n > 0) {
                v_corpus.kind = CorpusSpec::Kind::random;
            }
            v_corpus.count = v_count;
            if (v_max_n > 0 && v_corpus.kind != CorpusSpec::Kind::exhaustive)
                v_corpus.max_n = v_max_n;

            std::vector<std::string> suites =
                v_suite == "all" ? verify_suites() : std::vector<std::string>{v_suite};
            bool all_pass = true;
            for (const auto& id : suites) {
                VerifyReport rep = run_verify(id, v_corpus, opt.threads);
                all_pass = all_pass && rep.pass();
                if (opt.format == Format::json_fmt)
                    std::cout << rep.json() << "\n";
                else
                    std::cout << rep.text();
            }
            return all_pass ? 0 : 1;
        }

        if (cmd_batch->parsed()) {
            GraphArg arg = resolve_graph_arg(b_file);
            if (!arg.batch) throw DomainError("batch requires a file of graph6 lines");
            if (b_command == "spark")
                return run_batch(arg, opt.format, [&](const Graph& g) {
                    return spark_record(g, SparkMethod::branch_and_bound);
                });
            if (b_command == "forts")
                return run_batch(arg, opt.format,
                                 [&](const Graph& g) { return forts_record(g, false); });
            VertexSet initial = parse_vertex_set(b_initial);
            return run_batch(arg, opt.format,
                             [&](const Graph& g) { return zf_record(g, initial); });
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
