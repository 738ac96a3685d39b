#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace klreg::cli {

using Json = nlohmann::ordered_json;

namespace {

Json cell_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json cells_json(const CellSet& s) {
    Json a = Json::array();
    for (const auto& c : s) a.push_back(cell_json(c));
    return a;
}

Json perm_json(const Permutation& p) { return Json(p.word()); }

Json lines_json(const std::string& text) {
    Json a = Json::array();
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) a.push_back(line);
    return a;
}

Json half_points_json(const std::vector<HalfPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_string(p));
    return a;
}

Json marks_json(const std::vector<Mark>& marks) {
    Json a = Json::array();
    for (const auto& m : marks) a.push_back({{"point", {m.point.row, m.point.col}}, {"r", m.r}});
    return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json zip_json(const ZipResult& z) {
    Json j;
    j["ell_v"] = z.ell_v;
    j["ell_w"] = z.ell_w;
    j["groth_degree"] = z.degree;
    j["regularity"] = z.regularity;
    j["a_invariant"] = z.a_invariant;
    Json comps = Json::array();
    for (std::size_t q = 0; q < z.components.size(); ++q) {
        Json c;
        c["cells"] = cells_json(z.components[q].cells);
        Json chain = Json::array();
        Json rooms = Json::array();
        for (const auto& b : z.chains[q].boxes) {
            chain.push_back(cell_json(b));
            rooms.push_back(z.rooms.at(b));
        }
        c["diagonal"] = chain;
        c["rooms"] = rooms;
        c["room_sum"] = z.room_sums[q];
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

Json render_json(const ZipResult& z) {
    Json r;
    r["d_top"] = lines_json(render_diagram(z.top.region, z.top.pluses));
    r["d_zip"] = lines_json(render_diagram(z.zip.region, z.zip.pluses));
    r["d_zip_k"] = lines_json(render_diagram(z.zip.region, z.zip.pluses, set_difference(z.zip_k.pluses, z.zip.pluses)));
    return r;
}

const char* verdict(bool agree) { return agree ? "AGREE" : "DISAGREE"; }

struct PairOptions {
    std::string v, w;
    bool render = false;
    bool oracle = false;
    bool recurrence = false;
};

struct Report {
    Json json;
    int code = kOk;
};

Report pair_report(const PairOptions& o) {
    const Permutation v = parse_permutation(o.v);
    const Permutation w = parse_permutation(o.w);
    const ZipResult z = zip(v, w);
    Json j;
    j["mode"] = "pair";
    j["v"] = perm_json(v);
    j["w"] = perm_json(w);
    const Json zj = zip_json(z);
    for (const auto& [k, val] : zj.items()) j[k] = val;
    bool agree = true;
    if (o.recurrence) {
        const int d = groth_degree_recursive(v, w);
        agree = agree && d == z.degree;
        j["recurrence"] = {{"groth_degree", d}, {"verdict", verdict(d == z.degree)}};
    }
    if (o.oracle) {
        const std::size_t budget = budget_from_env();
        const auto cs = closure(v, w, budget);
        const bool subword = brute_earliest_subword(v, w, budget) == d_ne(v, w);
        const bool ok = cs.max_size == static_cast<std::size_t>(z.degree) && subword;
        agree = agree && ok;
        j["oracle"] = {{"closure_size", cs.diagrams.size()},
                       {"closure_max", cs.max_size},
                       {"earliest_subword_matches", subword},
                       {"verdict", verdict(ok)}};
    }
    if (o.render) j["render"] = render_json(z);
    return {std::move(j), agree ? kOk : kDisagree};
}

struct LadderOptions {
    std::string file;
    bool render = false;
    bool oracle = false;
    std::string export_ideal;
};

Report ladder_report(const LadderOptions& o) {
    const Ladder L = load_ladder(o.file);
    const auto rep = validate_minimal(L);
    const LadderResult res = analyze_ladder(L);
    Json j;
    j["mode"] = "ladder";
    j["lambda"] = L.lambda();
    j["mu"] = L.mu();
    j["marked"] = marks_json(L.marked());
    j["minimal"] = {{"ok", rep.ok}, {"row_offset_breaks", rep.row_offset_breaks}, {"col_offset_breaks", rep.col_offset_breaks}};
    j["v"] = perm_json(res.pair.v);
    j["w"] = perm_json(res.pair.w);
    j["ell_v"] = res.zip.ell_v;
    j["ell_w"] = res.zip.ell_w;
    j["groth_degree"] = res.zip.degree;
    j["regularity"] = res.regularity;
    j["a_invariant"] = res.a_invariant;
    j["cells"] = res.cells;
    j["weight"] = res.weight;
    j["blanks"] = res.blanks;
    j["elbow_count"] = res.elbow_cells.size();
    j["elbows"] = cells_json(res.elbow_cells);
    j["boundary"] = {{"V", half_points_json(res.boundary.V)},
                     {"H", half_points_json(res.boundary.H)},
                     {"fill_ins", marks_json(res.boundary.fill_ins)}};
    bool agree = res.regularity == res.zip.regularity && res.a_invariant == res.zip.a_invariant;
    j["zip_cross_check"] = {{"regularity", res.zip.regularity}, {"a_invariant", res.zip.a_invariant}, {"verdict", verdict(agree)}};
    if (o.oracle) {
        const std::size_t budget = budget_from_env();
        const auto full = closure(res.pair.v, res.pair.w, budget);
        const auto exc = closure(res.pair.v, res.pair.w, budget, false);
        const auto fams = enumerate_nilp(L, budget);
        const bool gens = kl_generators_compressed(res.pair.v, res.pair.w) == ladder_generators(L);
        const bool ok = full.max_size == static_cast<std::size_t>(res.zip.degree) && fams.size() == exc.diagrams.size() && gens;
        agree = agree && ok;
        j["oracle"] = {{"closure_max", full.max_size},
                       {"excited_diagrams", exc.diagrams.size()},
                       {"lattice_path_families", fams.size()},
                       {"generators_match", gens},
                       {"verdict", verdict(ok)}};
    }
    if (!o.export_ideal.empty()) {
        const auto gens = ladder_generators(L);
        std::ofstream f(o.export_ideal);
        if (!f) throw ValidationError("cannot write " + o.export_ideal);
        const bool m2 = o.export_ideal.size() >= 3 && o.export_ideal.compare(o.export_ideal.size() - 3, 3, ".m2") == 0;
        f << (m2 ? export_macaulay2(gens) : export_plain(gens));
        j["exported_generators"] = gens.size();
    }
    if (o.render) {
        j["render"] = {{"p_bot", lines_json(render_paths(L, res.bottom))},
                       {"p_zip", lines_json(render_paths(L, res.zipped))},
                       {"d_zip_k", render_json(res.zip)["d_zip_k"]}};
    }
    return {std::move(j), agree ? kOk : kDisagree};
}

int emit_report(const Report& r, std::ostream& out) {
    emit(out, r.json);
    return r.code;
}

std::string text_field(const Json& job, const char* key) {
    if (!job.contains(key)) throw ParseError(std::string("job is missing \"") + key + "\"");
    const auto& x = job.at(key);
    return x.is_string() ? x.get<std::string>() : x.dump();
}

bool flag_field(const Json& job, const char* key) {
    if (!job.contains(key)) return false;
    if (!job.at(key).is_boolean()) throw ParseError(std::string("job field \"") + key + "\" must be a boolean");
    return job.at(key).get<bool>();
}

Report job_report(const Json& job, const std::filesystem::path& base) {
    try {
        if (!job.is_object() || !job.contains("mode")) throw ParseError("each job must be an object with a \"mode\"");
        const std::string mode = job.at("mode").is_string() ? job.at("mode").get<std::string>() : "";
        if (mode == "pair") {
            PairOptions o;
            o.v = text_field(job, "v");
            o.w = text_field(job, "w");
            o.render = flag_field(job, "render");
            o.oracle = flag_field(job, "oracle");
            o.recurrence = flag_field(job, "recurrence");
            return pair_report(o);
        }
        if (mode == "ladder") {
            LadderOptions o;
            const std::filesystem::path file = text_field(job, "file");
            o.file = (file.is_relative() ? base / file : file).string();
            o.render = flag_field(job, "render");
            o.oracle = flag_field(job, "oracle");
            if (job.contains("export_ideal")) o.export_ideal = text_field(job, "export_ideal");
            return ladder_report(o);
        }
        throw ParseError("unknown job mode \"" + mode + "\"");
    } catch (const Error& e) {
        return {Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}, exit_code_for(e.kind())};
    } catch (const std::exception& e) {
        return {Json{{"error", "internal"}, {"message", e.what()}}, kInternal};
    }
}

// Jobs run concurrently; results are printed in input order.
// Relative ladder paths resolve against the batch file's directory.
// The exit status is the largest status of any job.
int run_batch(const std::string& path, unsigned threads, std::ostream& out) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    Json jobs;
    try {
        jobs = Json::parse(f);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed batch file: ") + e.what());
    }
    if (!jobs.is_array()) throw ParseError("batch file must hold a JSON array of jobs");
    const auto base = std::filesystem::path(path).parent_path();
    std::vector<Report> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) reports[i] = job_report(jobs[i], base);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Json results = Json::array();
    int code = kOk;
    for (auto& r : reports) {
        code = std::max(code, r.code);
        results.push_back({{"status", r.code}, {"result", std::move(r.json)}});
    }
    emit(out, Json{{"mode", "batch"}, {"jobs", results}});
    return code;
}

struct SweepOptions {
    int n = 5;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

int run_sweep(const SweepOptions& o, std::ostream& out) {
    if (o.n < 1 || o.n > 9) throw RangeError("sweep size must lie in [1,9]");
    const auto perms = all_321_avoiding(o.n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (o.samples == 0) {
        for (std::size_t a = 0; a < perms.size(); ++a)
            for (std::size_t b = 0; b < perms.size(); ++b)
                if (bruhat_leq(perms[b], perms[a])) pairs.emplace_back(a, b);
    } else {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        while (pairs.size() < o.samples) {
            const std::size_t a = pick(rng), b = pick(rng);
            if (bruhat_leq(perms[b], perms[a])) pairs.emplace_back(a, b);
        }
    }
    const std::size_t budget = budget_from_env();
    std::size_t bad = 0;
    Json first = nullptr;
    for (const auto& [a, b] : pairs) {
        const auto& v = perms[a];
        const auto& w = perms[b];
        const int dz = groth_degree(v, w);
        const int dr = groth_degree_recursive(v, w);
        const auto dc = static_cast<int>(closure(v, w, budget).max_size);
        if (dz != dr || dz != dc) {
            if (bad++ == 0) first = {{"v", perm_json(v)}, {"w", perm_json(w)}, {"zip", dz}, {"recurrence", dr}, {"closure", dc}};
        }
    }
    Json j;
    j["mode"] = "sweep";
    j["n"] = o.n;
    j["exhaustive"] = o.samples == 0;
    j["pairs"] = pairs.size();
    j["disagreements"] = bad;
    if (bad) j["first_disagreement"] = first;
    j["verdict"] = verdict(bad == 0);
    emit(out, j);
    return bad == 0 ? kOk : kDisagree;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
    std::string t = text;
    const auto first = t.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw ParseError("empty permutation");
    t = t.substr(first, t.find_last_not_of(" \t\n") - first + 1);
    std::vector<int> word;
    if (t.front() == '[') {
        Json j;
        try {
            j = Json::parse(t);
        } catch (const Json::exception& e) {
            throw ParseError(std::string("malformed permutation array: ") + e.what());
        }
        if (!j.is_array()) throw ParseError("permutation must be an array");
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw ParseError("permutation entries must be integers");
            word.push_back(x.get<int>());
        }
        return Permutation(std::move(word));
    }
    const bool separated = t.find_first_of(" ,\t") != std::string::npos;
    for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ' ' && ch != ',' && ch != '\t')
            throw ParseError(std::string("unexpected character '") + ch + "' in permutation");
    if (!separated) {
        if (t.size() >= 10) throw ParseError("ambiguous permutation \"" + t + "\": separate entries when n >= 10");
        for (char ch : t) word.push_back(ch - '0');
        return Permutation(std::move(word));
    }
    std::string tok;
    std::istringstream in(t);
    while (std::getline(in, tok, ',')) {
        std::istringstream parts(tok);
        for (std::string p; parts >> p;) word.push_back(std::stoi(p));
    }
    return Permutation(std::move(word));
}

Ladder parse_ladder(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ladder JSON: ") + e.what());
    }
    try {
        std::vector<int> lambda = j.at("lambda").get<std::vector<int>>();
        std::vector<int> mu = j.contains("mu") ? j.at("mu").get<std::vector<int>>() : std::vector<int>{};
        std::vector<Mark> marks;
        for (const auto& m : j.at("marked")) {
            const auto pt = m.at("point").get<std::vector<int>>();
            if (pt.size() != 2) throw ParseError("marked point must have two coordinates");
            marks.push_back({{pt[0], pt[1]}, m.at("r").get<int>()});
        }
        return Ladder(std::move(lambda), std::move(mu), std::move(marks));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("ladder JSON has the wrong shape: ") + e.what());
    }
}

Ladder load_ladder(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_ladder(ss.str());
}

std::size_t budget_from_env() {
    const char* s = std::getenv("KLREG_BUDGET");
    if (!s || !*s) return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long b = std::strtoull(s, &end, 10);
    if (*end != '\0' || b == 0) throw ParseError(std::string("KLREG_BUDGET must be a positive integer, got \"") + s + "\"");
    return static_cast<std::size_t>(b);
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return kUsage;
        case ErrorKind::Resource: return kResource;
        default: return kInvalid;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regularity and a-invariants of 321-avoiding Kazhdan-Lusztig and ladder determinantal varieties", "klreg"};
    app.require_subcommand(1);

    PairOptions po;
    auto* pair = app.add_subcommand("pair", "Analyze a pair w <= v of 321-avoiding permutations");
    pair->add_option("--v", po.v, "Permutation v")->required();
    pair->add_option("--w", po.w, "Permutation w")->required();
    pair->add_flag("--render", po.render, "Include D_top, D_zip and D_zip^K figures");
    pair->add_flag("--oracle", po.oracle, "Cross-check against brute-force closure and subword search");
    pair->add_flag("--recurrence", po.recurrence, "Cross-check against the degree recurrence");

    LadderOptions lo;
    auto* ladder = app.add_subcommand("ladder", "Analyze a two-sided ladder with marked points");
    ladder->add_option("--file", lo.file, "Ladder JSON file")->required();
    ladder->add_flag("--render", lo.render, "Include the bottom and zipped path families");
    ladder->add_flag("--oracle", lo.oracle, "Cross-check against brute-force enumerations");
    ladder->add_option("--export-ideal", lo.export_ideal, "Write generators (Macaulay2 script if the path ends in .m2)");

    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "Compare degree formulas over 321-avoiding pairs in S_n");
    sweep->add_option("--n", so.n, "Permutation size")->required();
    sweep->add_option("--samples", so.samples, "Random pairs to test; 0 tests every pair")->default_val(0);
    sweep->add_option("--seed", so.seed, "Random seed")->default_val(1);

    std::string batch_file;
    unsigned batch_threads = 0;
    auto* batch = app.add_subcommand("batch", "Run a JSON array of pair and ladder jobs in parallel");
    batch->add_option("--file", batch_file, "Batch file")->required();
    batch->add_option("--threads", batch_threads, "Worker threads; 0 uses every core")->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*pair) return emit_report(pair_report(po), out);
        if (*ladder) return emit_report(ladder_report(lo), out);
        if (*batch) return run_batch(batch_file, batch_threads, out);
        return run_sweep(so, out);
    } catch (const Error& e) {
        err << "klreg: " << error_kind_name(e.kind()) << " error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "klreg: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace klreg::cli
