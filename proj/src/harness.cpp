#include "ccgsa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace ccgsa {

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "gsa") return Algorithm::Gsa;
    if (s == "ccgsa-dg" || s == "ccgsa_dg" || s == "ccgsa") return Algorithm::CcgsaDg;
    throw ConfigError("unknown algorithm '" + s + "'");
}

std::string to_string(Algorithm a) {
    return a == Algorithm::Gsa ? "gsa" : "ccgsa-dg";
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_sci3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

std::string ProblemSpec::label() const {
    if (kind == Kind::Classical) return to_string(classical);
    return "structured-" + ccgsa::to_string(category) + "-" + ccgsa::to_string(base) + "-g" +
           std::to_string(group_size) + "-s" + std::to_string(problem_seed);
}

Objective ProblemSpec::build() const {
    if (kind == Kind::Classical) return make_classical(classical, dim);
    return make_structured(category, dim, group_size, base, problem_seed).objective;
}

std::optional<GroupStructure> ProblemSpec::truth() const {
    if (kind == Kind::Classical) return std::nullopt;
    return make_structured(category, dim, group_size, base, problem_seed).truth;
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw ConfigError("config: runs must be >= 1");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
    if (fe_budget == 0) throw ConfigError("config: fe_budget must be positive");
    if (problem.dim < 1) throw ConfigError("config: dim must be >= 1");
    if (trace_stride == 0) throw ConfigError("config: trace_stride must be >= 1");
    if (algorithm == Algorithm::Gsa) {
        gsa.validate();
        if (fe_budget < static_cast<std::uint64_t>(gsa.pop_size))
            throw ConfigError("config: fe_budget smaller than the gsa population size");
    } else {
        cc.validate();
    }
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void gsa_identity(std::ostringstream& os, const std::string& prefix, const GsaParams& p) {
    os << prefix << ".pop=" << p.pop_size << '\n'
       << prefix << ".iters=" << p.max_iter << '\n'
       << prefix << ".g0=" << format_full(p.g0) << '\n'
       << prefix << ".alpha=" << format_full(p.alpha) << '\n'
       << prefix << ".epsilon=" << format_full(p.epsilon) << '\n'
       << prefix << ".kbest_final=" << p.kbest_final << '\n';
}

} // namespace

std::string ExperimentConfig::fingerprint() const {
    std::ostringstream os;
    os << "algorithm=" << ccgsa::to_string(algorithm) << '\n'
       << "problem=" << problem.label() << '\n'
       << "dim=" << problem.dim << '\n'
       << "runs=" << runs << '\n'
       << "seed=" << base_seed << '\n'
       << "fe_budget=" << fe_budget << '\n'
       << "trace_stride=" << trace_stride << '\n';
    if (algorithm == Algorithm::Gsa) {
        gsa_identity(os, "gsa", gsa);
    } else {
        os << "cc.cycles=" << cc.cycles << '\n'
           << "cc.epsilon_dg=" << format_full(cc.grouping.epsilon_dg) << '\n'
           << "cc.refresh_best_per_group=" << (cc.refresh_best_per_group ? 1 : 0) << '\n';
        gsa_identity(os, "cc.gsa", cc.gsa);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const auto r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': '" + v + "'");
    }
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config: bad boolean for '" + key + "': '" + v + "'");
}

bool apply_gsa_key(GsaParams& p, const std::string& sub, const std::string& key,
                   const std::string& value) {
    if (sub == "pop") {
        p.pop_size = parse_int(key, value);
    } else if (sub == "iters") {
        p.max_iter = parse_int(key, value);
    } else if (sub == "g0") {
        p.g0 = parse_double(key, value);
    } else if (sub == "alpha") {
        p.alpha = parse_double(key, value);
    } else if (sub == "epsilon") {
        p.epsilon = parse_double(key, value);
    } else if (sub == "kbest_final") {
        p.kbest_final = parse_int(key, value);
    } else {
        return false;
    }
    return true;
}

} // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "algorithm") {
        cfg.algorithm = algorithm_from_string(value);
    } else if (key == "function") {
        if (value == "structured") {
            cfg.problem.kind = ProblemSpec::Kind::Structured;
        } else {
            cfg.problem.kind = ProblemSpec::Kind::Classical;
            cfg.problem.classical = classical_from_string(value);
        }
    } else if (key == "dim") {
        cfg.problem.dim = parse_int(key, value);
    } else if (key == "category") {
        cfg.problem.category = category_from_string(value);
    } else if (key == "base") {
        cfg.problem.base = base_from_string(value);
    } else if (key == "group_size") {
        cfg.problem.group_size = parse_int(key, value);
    } else if (key == "problem_seed") {
        cfg.problem.problem_seed = parse_u64(key, value);
    } else if (key == "runs") {
        cfg.runs = parse_int(key, value);
    } else if (key == "seed") {
        cfg.base_seed = parse_u64(key, value);
    } else if (key == "fe_budget") {
        cfg.fe_budget = parse_u64(key, value);
    } else if (key == "trace_stride") {
        cfg.trace_stride = parse_u64(key, value);
    } else if (key == "out") {
        cfg.output_dir = value;
    } else if (key == "workers") {
        cfg.workers = parse_int(key, value);
    } else if (key == "emit_groups") {
        cfg.emit_groups = parse_bool(key, value);
    } else if (key == "cc.cycles") {
        cfg.cc.cycles = parse_int(key, value);
    } else if (key == "cc.epsilon_dg") {
        cfg.cc.grouping.epsilon_dg = parse_double(key, value);
    } else if (key == "cc.refresh_best_per_group") {
        cfg.cc.refresh_best_per_group = parse_bool(key, value);
    } else if (key.rfind("gsa.", 0) == 0) {
        if (!apply_gsa_key(cfg.gsa, key.substr(4), key, value))
            throw ConfigError("config: unknown key '" + key + "'");
    } else if (key.rfind("cc.gsa.", 0) == 0) {
        if (!apply_gsa_key(cfg.cc.gsa, key.substr(7), key, value))
            throw ConfigError("config: unknown key '" + key + "'");
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) return std::numeric_limits<double>::quiet_NaN();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string groups_to_line(const GroupStructure& gs) {
    std::ostringstream os;
    for (std::size_t g = 0; g < gs.groups.size(); ++g) {
        if (g) os << " | ";
        for (std::size_t k = 0; k < gs.groups[g].size(); ++k) {
            if (k) os << ' ';
            os << gs.groups[g][k];
        }
    }
    return os.str();
}

GroupStructure groups_from_line(const std::string& line) {
    GroupStructure gs;
    std::istringstream in(line);
    std::vector<int> cur;
    std::string tok;
    while (in >> tok) {
        if (tok == "|") {
            gs.groups.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(std::stoi(tok));
        }
    }
    if (!cur.empty()) gs.groups.push_back(cur);
    return gs;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

std::string trace_file_content(const RunRecord& rec) {
    std::ostringstream os;
    os << "# fingerprint=" << rec.fingerprint << " seed=" << rec.seed << '\n';
    os << "evaluations\tbest\n";
    for (const auto& [e, b] : rec.trace) os << e << '\t' << format_full(b) << '\n';
    return os.str();
}

std::string record_file_content(const ExperimentConfig& cfg, const RunRecord& rec) {
    std::ostringstream os;
    os << "fingerprint = " << rec.fingerprint << '\n'
       << "algorithm = " << to_string(cfg.algorithm) << '\n'
       << "function = " << cfg.problem.label() << '\n'
       << "dim = " << cfg.problem.dim << '\n'
       << "seed = " << rec.seed << '\n'
       << "status = " << (rec.ok ? "ok" : "failed") << '\n';
    if (!rec.ok) os << "error = " << rec.error << '\n';
    os << "best_fitness = " << format_full(rec.best_fitness) << '\n'
       << "evaluations_used = " << rec.evaluations_used << '\n'
       << "duration_ms = " << format_full(rec.duration_ms) << '\n';
    os << "best_position =";
    for (double v : rec.best_position) os << ' ' << format_full(v);
    os << '\n';
    if (!rec.groups.groups.empty()) {
        os << "groups = " << groups_to_line(rec.groups) << '\n'
           << "grouping_evaluations = " << rec.grouping_evaluations << '\n'
           << "pairwise_checks = " << rec.pairwise_checks << '\n';
    }
    return os.str();
}

RunRecord execute_run(const ExperimentConfig& cfg, const Objective& obj,
                      const std::string& fingerprint, std::uint64_t seed) {
    RunRecord rec;
    rec.fingerprint = fingerprint;
    rec.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Rng rng(seed);
        if (cfg.algorithm == Algorithm::Gsa) {
            GsaResult r = run_gsa(obj, cfg.gsa, cfg.fe_budget, rng, &rec.trace, cfg.trace_stride);
            rec.best_fitness = r.best_fitness;
            rec.best_position = r.best_position;
            rec.evaluations_used = r.evaluations_used;
        } else {
            CcConfig cc = cfg.cc;
            cc.fe_budget = cfg.fe_budget;
            cc.seed = seed;
            RunResult r = run_ccgsa_dg(obj, cc, rng, cfg.trace_stride);
            rec.best_fitness = r.best_fitness;
            rec.best_position = r.best_position;
            rec.evaluations_used = r.evaluations_used;
            rec.trace = r.trace;
            rec.groups = r.groups;
            rec.grouping_evaluations = r.grouping_evaluations;
            rec.pairwise_checks = r.pairwise_checks;
        }
        rec.ok = true;
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
    }
    rec.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace

SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<RunRecord>& records) {
    SummaryRow row;
    row.function = cfg.problem.label();
    row.dim = cfg.problem.dim;
    row.algorithm = to_string(cfg.algorithm);
    std::vector<double> finals;
    double eval_sum = 0.0;
    for (const auto& r : records) {
        if (!r.ok) continue;
        finals.push_back(r.best_fitness);
        eval_sum += static_cast<double>(r.evaluations_used);
    }
    row.runs = static_cast<int>(finals.size());
    if (!finals.empty()) {
        row.best = *std::min_element(finals.begin(), finals.end());
        row.worst = *std::max_element(finals.begin(), finals.end());
        row.median = median_of(finals);
        double s = 0.0;
        for (double f : finals) s += f;
        row.mean = s / static_cast<double>(finals.size());
        row.mean_evaluations = eval_sum / static_cast<double>(finals.size());
    } else {
        row.best = row.worst = row.median = row.mean = std::numeric_limits<double>::quiet_NaN();
    }
    return row;
}

namespace {

const char* kSummaryHeader = "function\tdim\talgorithm\truns\tbest\tmedian\tmean\tworst\tmean_evals\n";

std::string summary_tsv(const SummaryRow& s) {
    std::ostringstream os;
    os << kSummaryHeader;
    os << s.function << '\t' << s.dim << '\t' << s.algorithm << '\t' << s.runs << '\t'
       << format_full(s.best) << '\t' << format_full(s.median) << '\t' << format_full(s.mean)
       << '\t' << format_full(s.worst) << '\t' << format_full(s.mean_evaluations) << '\n';
    return os.str();
}

} // namespace

std::string convergence_table(const std::vector<RunRecord>& records) {
    std::vector<const RunRecord*> ok;
    for (const auto& r : records)
        if (r.ok && !r.trace.empty()) ok.push_back(&r);
    std::ostringstream os;
    os << "evaluations";
    for (const auto* r : ok) os << "\trun_" << r->seed;
    os << "\tmedian\n";
    if (ok.empty()) return os.str();

    std::vector<std::uint64_t> grid;
    for (const auto* r : ok)
        for (const auto& [e, b] : r->trace) grid.push_back(e);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<std::size_t> cursor(ok.size(), 0);
    std::vector<double> current(ok.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::uint64_t e : grid) {
        std::vector<double> row(ok.size());
        for (std::size_t i = 0; i < ok.size(); ++i) {
            const auto& tr = ok[i]->trace;
            while (cursor[i] < tr.size() && tr[cursor[i]].first <= e) {
                current[i] = tr[cursor[i]].second;
                ++cursor[i];
            }
            row[i] = current[i];
        }
        os << e;
        std::vector<double> defined;
        for (double v : row) {
            os << '\t' << (std::isnan(v) ? "nan" : format_full(v));
            if (!std::isnan(v)) defined.push_back(v);
        }
        os << '\t' << format_full(median_of(defined)) << '\n';
    }
    return os.str();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    return run_experiment(cfg, cfg.problem.build());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const Objective& obj) {
    cfg.validate();
    obj.validate();
    const std::string fp = cfg.fingerprint();
    const fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    {
        // Probe writability up front so a bad output path fails before any run.
        const fs::path probe = dir / ".write_probe";
        std::ofstream out(probe);
        if (!out) throw IoError("output directory '" + cfg.output_dir + "' is not writable");
        out.close();
        fs::remove(probe, ec);
    }

    ExperimentResult result;
    result.records.resize(cfg.runs);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= cfg.runs) return;
            const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(r);
            RunRecord rec = execute_run(cfg, obj, fp, seed);
            write_text_file(dir / ("run_" + std::to_string(seed) + ".trace"),
                            trace_file_content(rec));
            write_text_file(dir / ("run_" + std::to_string(seed) + ".record"),
                            record_file_content(cfg, rec));
            result.records[r] = std::move(rec);
        }
    };
    const int nthreads = std::min(cfg.workers, cfg.runs);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.summary = summarize(cfg, result.records);
    write_text_file(dir / "summary.tsv", summary_tsv(result.summary));
    write_text_file(dir / "convergence.tsv", convergence_table(result.records));
    if (cfg.emit_groups && cfg.algorithm == Algorithm::CcgsaDg) {
        for (const auto& rec : result.records) {
            if (!rec.ok || rec.groups.groups.empty()) continue;
            std::ostringstream os;
            os << "# evaluations_used=" << rec.grouping_evaluations
               << " pairwise_checks=" << rec.pairwise_checks << '\n';
            for (const auto& g : rec.groups.groups) {
                for (std::size_t k = 0; k < g.size(); ++k) os << (k ? " " : "") << g[k];
                os << '\n';
            }
            write_text_file(dir / "groups.txt", os.str());
            break;
        }
    }
    return result;
}

namespace {

std::map<std::string, std::string> parse_kv_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

Trace load_trace_file(const fs::path& path) {
    Trace tr;
    std::ifstream in(path);
    if (!in) return tr;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("evaluations", 0) == 0) continue;
        std::istringstream ls(line);
        std::uint64_t e;
        double b;
        if (ls >> e >> b) tr.emplace_back(e, b);
    }
    return tr;
}

} // namespace

std::vector<RunRecord> load_records(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("run_", 0) == 0 && entry.path().extension() == ".record")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> out;
    for (const auto& f : files) {
        const auto kv = parse_kv_file(f);
        RunRecord rec;
        rec.fingerprint = kv.count("fingerprint") ? kv.at("fingerprint") : "";
        rec.seed = kv.count("seed") ? std::stoull(kv.at("seed")) : 0;
        rec.ok = kv.count("status") && kv.at("status") == "ok";
        if (kv.count("error")) rec.error = kv.at("error");
        if (kv.count("best_fitness")) rec.best_fitness = std::stod(kv.at("best_fitness"));
        if (kv.count("evaluations_used")) rec.evaluations_used = std::stoull(kv.at("evaluations_used"));
        if (kv.count("duration_ms")) rec.duration_ms = std::stod(kv.at("duration_ms"));
        if (kv.count("best_position")) {
            std::istringstream bs(kv.at("best_position"));
            double v;
            while (bs >> v) rec.best_position.push_back(v);
        }
        if (kv.count("groups")) rec.groups = groups_from_line(kv.at("groups"));
        if (kv.count("grouping_evaluations"))
            rec.grouping_evaluations = std::stoull(kv.at("grouping_evaluations"));
        if (kv.count("pairwise_checks")) rec.pairwise_checks = std::stoull(kv.at("pairwise_checks"));
        rec.trace = load_trace_file(f.parent_path() / ("run_" + std::to_string(rec.seed) + ".trace"));
        out.push_back(std::move(rec));
    }
    if (out.empty()) throw IoError("no run records found in '" + dir + "'");
    return out;
}

SummaryRow summarize_directory(const std::string& dir) {
    const auto records = load_records(dir);
    // Function/dim/algorithm come from the first record file; all records in
    // one directory share a fingerprint.
    const auto kv = parse_kv_file(fs::path(dir) / ("run_" + std::to_string(records.front().seed) + ".record"));
    ExperimentConfig shim;
    shim.algorithm = algorithm_from_string(kv.at("algorithm"));
    shim.problem.dim = std::stoi(kv.at("dim"));
    SummaryRow row = summarize(shim, records);
    row.function = kv.at("function");
    write_text_file(fs::path(dir) / "summary.tsv", summary_tsv(row));
    return row;
}

SummaryRow load_summary(const std::string& dir) {
    std::ifstream in(fs::path(dir) / "summary.tsv");
    if (!in) throw IoError("cannot open summary.tsv in '" + dir + "'");
    std::string header, line;
    if (!std::getline(in, header) || !std::getline(in, line))
        throw IoError("summary.tsv in '" + dir + "' is empty");
    std::istringstream ls(line);
    SummaryRow s;
    ls >> s.function >> s.dim >> s.algorithm >> s.runs >> s.best >> s.median >> s.mean >>
        s.worst >> s.mean_evaluations;
    if (!ls) throw IoError("summary.tsv in '" + dir + "' is malformed");
    return s;
}

ComparisonTable compare_summaries(const std::vector<SummaryRow>& summaries) {
    ComparisonTable t;
    for (const auto& s : summaries)
        if (std::find(t.algorithms.begin(), t.algorithms.end(), s.algorithm) == t.algorithms.end())
            t.algorithms.push_back(s.algorithm);
    std::map<std::pair<std::string, int>, std::vector<std::optional<double>>> rows;
    for (const auto& s : summaries) {
        auto& row = rows[{s.function, s.dim}];
        row.resize(t.algorithms.size());
        const auto col = static_cast<std::size_t>(
            std::find(t.algorithms.begin(), t.algorithms.end(), s.algorithm) - t.algorithms.begin());
        row[col] = s.median;
    }
    for (auto& [key, row] : rows) {
        row.resize(t.algorithms.size());
        t.rows.emplace_back(key, row);
    }
    return t;
}

std::string ComparisonTable::pretty() const {
    std::ostringstream os;
    os << "function  dim";
    for (const auto& a : algorithms) os << "  " << a;
    os << '\n';
    for (const auto& [key, row] : rows) {
        os << key.first << "  " << key.second;
        for (const auto& cell : row) os << "  " << (cell ? format_sci3(*cell) : "-");
        os << '\n';
    }
    return os.str();
}

std::string ComparisonTable::machine_readable() const {
    std::ostringstream os;
    os << "function\tdim";
    for (const auto& a : algorithms) os << '\t' << a;
    os << '\n';
    for (const auto& [key, row] : rows) {
        os << key.first << '\t' << key.second;
        for (const auto& cell : row) os << '\t' << (cell ? format_full(*cell) : "-");
        os << '\n';
    }
    return os.str();
}

ComparisonTable parse_comparison_tsv(const std::string& text) {
    ComparisonTable t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("comparison table: empty input");
    {
        std::istringstream hs(line);
        std::string col;
        std::vector<std::string> cols;
        while (std::getline(hs, col, '\t')) cols.push_back(col);
        if (cols.size() < 3 || cols[0] != "function" || cols[1] != "dim")
            throw IoError("comparison table: bad header");
        t.algorithms.assign(cols.begin() + 2, cols.end());
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fn, dim_s, cell;
        std::getline(ls, fn, '\t');
        std::getline(ls, dim_s, '\t');
        std::vector<std::optional<double>> row;
        while (std::getline(ls, cell, '\t'))
            row.push_back(cell == "-" ? std::optional<double>{} : std::optional<double>(std::stod(cell)));
        row.resize(t.algorithms.size());
        t.rows.emplace_back(std::make_pair(fn, std::stoi(dim_s)), row);
    }
    return t;
}

} // namespace ccgsa
