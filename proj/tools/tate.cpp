#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tate/io.hpp"
#include "tate/hochschild.hpp"

using namespace tate;

namespace {

enum Exit { ok = 0, checks_failed = 1, usage = 2, bad_input = 3, computation = 4, internal = 5 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string group = "S3";
    std::string field;
    bool pretty = false;
    std::string out;
};

Field pick_field(const Common& c) {
    if (!c.field.empty()) return Field::parse(c.field);
    if (const char* env = std::getenv("TATE_FIELD"); env && *env) return Field::parse(env);
    return Field::rationals();
}

Json read_json_arg(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw FormatError("cannot read '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

FiniteGroup load_group(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") return group_from_json(read_json_arg(arg));
    if (!arg.empty() && arg[0] == '{') return group_from_json(Json::parse(arg));
    return FiniteGroup::preset(arg);
}

std::vector<Json> read_elements(const std::vector<std::string>& args) {
    std::vector<Json> out;
    for (const auto& a : args) {
        Json j = read_json_arg(a);
        if (j.is_array()) {
            for (auto& e : j) out.push_back(e);
        } else if (j.is_object() && j.contains("components")) {
            for (auto& e : j.at("components")) out.push_back(e.at("element"));
        } else {
            out.push_back(j);
        }
    }
    return out;
}

void emit(const Common& c, const Json& j, const std::string& human) {
    std::string text = c.pretty ? human : j.dump();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw FormatError("cannot write '" + c.out + "'");
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::string pretty_report(const std::vector<Report>& rs) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.pass() ? "PASS " : "FAIL ") << r.check;
        if (!r.group.empty()) os << "  group " << r.group << ", field " << r.field << ", window [" << r.lo << "," << r.hi << "], seed " << r.seed;
        os << "\n";
        for (const auto& i : r.identities) {
            os << "  " << (i.pass() ? "ok   " : "FAIL ") << i.name << ": " << i.failures << " failures / " << i.checked << " checked";
            if (i.expect_failure) os << " (control, must fail)";
            os << "\n";
            if (!i.witness.empty() && !i.pass()) os << "       witness: " << i.witness << "\n";
        }
    }
    return os.str();
}

std::string pretty_group(const ConjugacyData& cd) {
    std::ostringstream os;
    const auto& G = cd.group();
    os << G.name() << ": order " << G.order() << (G.is_abelian() ? ", abelian" : "") << ", " << cd.num_classes() << " classes\n";
    for (int c = 0; c < cd.num_classes(); ++c) {
        os << "  class " << c << ": rep " << int(cd.rep(c)) << ", size " << cd.class_size(c) << ", centralizer {";
        for (std::size_t i = 0; i < cd.centralizer(c).size(); ++i) os << (i ? "," : "") << int(cd.centralizer(c)[i]);
        os << "}\n";
    }
    return os.str();
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated list of integers, got '" + s + "'");
        }
    }
    return out;
}

int run_compute(const std::string& op, const Common& c, const std::vector<std::string>& inputs, int arity,
                bool original_sign) {
    const FiniteGroup G = load_group(c.group);
    const Field f = pick_field(c);
    ConjugacyData cd(G);
    auto docs = read_elements(inputs);
    auto need = [&](std::size_t k) {
        if (docs.size() != k)
            throw UsageError("compute " + op + " takes " + std::to_string(k) + " input(s), got " + std::to_string(docs.size()));
    };
    auto tate_in = [&](std::size_t i) { return tate_from_json(G, docs[i], f); };
    auto dec_in = [&](std::size_t i) { return decomposed_from_json(cd, docs[i], f); };
    const M3Sign sign = original_sign ? M3Sign::original : M3Sign::corrected;

    if (op == "diff") {
        need(1);
        if (element_kind(docs[0]) == "decomposed") {
            auto v = decomposed_diff(cd, dec_in(0));
            emit(c, to_json(v), describe(v));
        } else {
            auto v = dprime(G, tate_in(0));
            emit(c, to_json(v), describe(v));
        }
    } else if (op == "cup") {
        need(2);
        auto v = cup(G, tate_in(0), tate_in(1));
        emit(c, to_json(v), describe(v));
    } else if (op == "m3") {
        need(3);
        auto v = m3(G, tate_in(0), tate_in(1), tate_in(2), sign);
        emit(c, to_json(v), describe(v));
    } else if (op == "mhat") {
        if (arity > 0) need(static_cast<std::size_t>(arity));
        if (docs.empty()) throw UsageError("compute mhat needs inputs");
        std::vector<DecomposedElement> in;
        for (std::size_t i = 0; i < docs.size(); ++i) in.push_back(dec_in(i));
        TransferEngine engine(cd, sign);
        auto v = engine.mhat(in);
        emit(c, to_json(v), describe(v));
    } else if (op == "decompose") {
        need(1);
        auto parts = project(cd, tate_in(0));
        Json comps = Json::array();
        std::string human;
        for (int k = 0; k < cd.num_classes(); ++k) {
            comps.push_back(Json{{"class", k}, {"rep", static_cast<int>(cd.rep(k))}, {"element", to_json(parts[k])}});
            human += "class " + std::to_string(k) + ": " + describe(parts[k]) + "\n";
        }
        emit(c, Json{{"components", comps}}, human);
    } else if (op == "iota") {
        need(1);
        auto v = iota_hat(cd, dec_in(0));
        emit(c, to_json(v), describe(v));
    } else if (op == "rho") {
        need(1);
        auto v = rho_hat(cd, tate_in(0));
        emit(c, to_json(v), describe(v));
    } else if (op == "s") {
        need(1);
        auto v = s_hat(cd, tate_in(0));
        emit(c, to_json(v), describe(v));
    } else {
        throw UsageError("unknown compute operation '" + op + "'");
    }
    return ok;
}

int run_abelian_table(const Common& c, const std::string& op, const std::string& degrees, int window, bool csv) {
    const FiniteGroup G = load_group(c.group);
    const Field f = pick_field(c);
    if (op.size() != 2 || op[0] != 'm' || op[1] < '1' || op[1] > '3') throw UsageError("--op is one of m1, m2, m3");
    const int arity = op[1] - '0';
    ConjugacyData cd(G);
    if (!G.is_abelian()) throw NotAbelian(G.name() + " is not abelian");
    std::vector<std::vector<int>> profiles;
    if (!degrees.empty()) {
        auto d = parse_ints(degrees);
        if (static_cast<int>(d.size()) != arity) throw UsageError("--degrees needs " + std::to_string(arity) + " entries");
        profiles.push_back(d);
    } else {
        std::vector<int> d(arity, -window);
        for (;;) {
            profiles.push_back(d);
            int i = arity - 1;
            while (i >= 0 && d[i] == window) d[i--] = -window;
            if (i < 0) break;
            ++d[i];
        }
    }
    auto cochains = [&](int degree) {
        std::vector<AbelianCochain> out;
        for (Key k : decomposed_basis(cd, degree)) {
            Word w = unpack(k);
            if (w[0] != 0) continue;
            Word r;
            for (int i = 1; i < w.n; ++i) r.push(w[i]);
            out.push_back(AbelianCochain::basis(degree, f, r));
        }
        return out;
    };
    Json rows = Json::array();
    std::ostringstream text;
    if (csv) text << "inputs,output\n";
    for (const auto& p : profiles) {
        std::vector<std::vector<AbelianCochain>> slots;
        for (int d : p) slots.push_back(cochains(d));
        std::vector<std::size_t> idx(arity, 0);
        bool empty = false;
        for (const auto& s : slots) empty = empty || s.empty();
        if (empty) continue;
        for (;;) {
            std::vector<AbelianCochain> in;
            for (int i = 0; i < arity; ++i) in.push_back(slots[i][idx[i]]);
            AbelianCochain v = mhat_closed(G, in);
            Json ins = Json::array();
            std::string desc;
            for (const auto& a : in) {
                ins.push_back(to_json(a));
                desc += (desc.empty() ? "" : " ; ") + describe(a);
            }
            rows.push_back(Json{{"inputs", ins}, {"output", to_json(v)}});
            if (csv) text << "\"" << desc << "\",\"" << describe(v) << "\"\n";
            else text << desc << "  ->  " << describe(v) << "\n";
            int i = arity - 1;
            while (i >= 0 && idx[i] + 1 == slots[i].size()) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
    }
    Common cc = c;
    if (csv) cc.pretty = true;
    emit(cc, Json{{"group", G.name()}, {"field", f.name()}, {"op", op}, {"rows", rows}}, text.str());
    return ok;
}

int run_verify(const Common& c, const std::string& check, int window, std::uint64_t seed, int samples, long limit,
               bool timing) {
    const FiniteGroup G = load_group(c.group);
    CheckOptions opt;
    opt.field = pick_field(c);
    opt.lo = -window;
    opt.hi = window;
    opt.seed = seed;
    opt.samples = samples;
    opt.exhaustive_limit = limit;
    if (window < 0 || window > 4) throw UsageError("--window must be between 0 and 4");
    auto reports = run_checks(check, G, opt);
    ReportFormat fmt;
    fmt.timing = timing;
    Json j = to_json(reports, fmt);
    emit(c, j, pretty_report(reports));
    return j.at("pass").get<bool>() ? ok : checks_failed;
}

int run_export(const Common& c, const std::string& what, int degree, const std::string& side) {
    const FiniteGroup G = load_group(c.group);
    const Field f = pick_field(c);
    ConjugacyData cd(G);
    if (what == "group") {
        emit(c, to_json(G), pretty_group(cd));
    } else if (what == "classes") {
        emit(c, conjugacy_json(cd), pretty_group(cd));
    } else if (what == "basis") {
        Json a = Json::array();
        std::string human;
        if (side == "tate") {
            for (Key k : tate_basis(G, degree)) {
                TateElement e(degree, f, Terms{{k, Scalar::one(f)}});
                a.push_back(to_json(e));
                human += describe(e) + "\n";
            }
        } else if (side == "decomposed") {
            for (Key k : decomposed_basis(cd, degree)) {
                DecomposedElement e(degree, f, Terms{{k, Scalar::one(f)}});
                a.push_back(to_json(e));
                human += describe(e) + "\n";
            }
        } else {
            throw UsageError("--side is tate or decomposed");
        }
        emit(c, a, human);
    } else {
        throw UsageError("export what: group, classes or basis");
    }
    return ok;
}

void add_common(CLI::App* app, Common& c, bool with_group = true) {
    if (with_group) app->add_option("--group,--preset", c.group, "preset name (Z2, Z4, S3, ...) or group JSON file")->capture_default_str();
    app->add_option("--field", c.field, "Q or Fp:p (default from TATE_FIELD, else Q)");
    app->add_flag("--pretty", c.pretty, "human-readable output instead of JSON");
    app->add_option("--out", c.out, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tate-Hochschild complexes of group algebras and their transferred A-infinity structure"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> action;

    auto* group = app.add_subcommand("group", "group presets and conjugacy data");
    group->require_subcommand(1);
    auto* group_list = group->add_subcommand("list", "list presets");
    add_common(group_list, common, false);
    group_list->callback([&] {
        action = [&] {
            auto names = FiniteGroup::preset_names();
            std::string human;
            for (const auto& n : names) human += n + "\n";
            emit(common, Json(names), human);
            return int(ok);
        };
    });
    auto* group_info = group->add_subcommand("info", "classes, centralizers and coset representatives");
    add_common(group_info, common);
    group_info->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(common.group);
            ConjugacyData cd(G);
            emit(common, conjugacy_json(cd), pretty_group(cd));
            return int(ok);
        };
    });

    auto* trees = app.add_subcommand("trees", "planar trees with 2- and 3-valent vertices");
    trees->require_subcommand(1);
    auto* trees_list = trees->add_subcommand("list", "all trees with n leaves");
    int tree_n = 3;
    trees_list->add_option("n", tree_n, "number of leaves")->required()->check(CLI::Range(1, 9));
    add_common(trees_list, common, false);
    trees_list->callback([&] {
        action = [&] {
            Json enc = Json::array();
            std::string human;
            for (const auto& t : enumerate_trees(tree_n)) {
                enc.push_back(t.encode());
                human += t.encode() + "\n";
            }
            emit(common, Json{{"n", tree_n}, {"count", enc.size()}, {"trees", enc}}, human);
            return int(ok);
        };
    });

    auto* compute = app.add_subcommand("compute", "evaluate one operation on JSON elements");
    std::string op;
    std::vector<std::string> inputs;
    int arity = 0;
    bool original_sign = false;
    compute->add_option("op", op, "diff | cup | m3 | mhat | decompose | iota | rho | s")
        ->required()
        ->check(CLI::IsMember({"diff", "cup", "m3", "mhat", "decompose", "iota", "rho", "s"}));
    compute->add_option("--inputs,-i", inputs, "element JSON: file, '-' for stdin, or inline; arrays are flattened")->required();
    compute->add_option("--n", arity, "number of inputs expected by mhat");
    compute->add_flag("--original-sign", original_sign, "use the uncorrected m3 sign");
    add_common(compute, common);
    compute->callback([&] { action = [&] { return run_compute(op, common, inputs, arity, original_sign); }; });

    auto* abelian = app.add_subcommand("abelian", "closed forms for abelian groups");
    abelian->require_subcommand(1);
    auto* table = abelian->add_subcommand("table", "closed-form m_n on every basis tuple");
    std::string table_op = "m2", degrees;
    int table_window = 1;
    bool csv = false;
    table->add_option("--op", table_op, "m1, m2 or m3")->capture_default_str();
    table->add_option("--degrees", degrees, "input degrees, comma separated, e.g. 1,-2");
    table->add_option("--window", table_window, "all degree profiles in [-w, w] when --degrees is absent")->capture_default_str();
    table->add_flag("--csv", csv, "CSV instead of JSON");
    add_common(table, common);
    table->callback([&] { action = [&] { return run_abelian_table(common, table_op, degrees, table_window, csv); }; });

    auto* verify = app.add_subcommand("verify", "run identity checks; exit 0 iff all pass");
    std::string check = "all";
    int window = 2, samples = 200;
    std::uint64_t seed = 1;
    long limit = 2'000'000;
    bool timing = false;
    std::vector<std::string> checks = check_names();
    checks.push_back("all");
    verify->add_option("check", check, "all | complex | retract | leibniz | m2 | stasheff | transferred | abelian | signs | composites | trees")
        ->check(CLI::IsMember(checks))
        ->capture_default_str();
    verify->add_option("--window", window, "degrees -w..w")->capture_default_str();
    verify->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
    verify->add_option("--samples", samples, "samples per sampled level")->capture_default_str();
    verify->add_option("--exhaustive-limit", limit, "largest tuple count run exhaustively")->capture_default_str();
    verify->add_flag("--timing", timing, "include seconds in the report");
    add_common(verify, common);
    verify->callback([&] { action = [&] { return run_verify(common, check, window, seed, samples, limit, timing); }; });

    auto* exp = app.add_subcommand("export", "write groups, classes or bases as JSON");
    std::string what = "group", side = "tate";
    int degree = 0;
    exp->add_option("what", what, "group | classes | basis")->check(CLI::IsMember({"group", "classes", "basis"}))->capture_default_str();
    exp->add_option("--degree", degree, "basis degree")->capture_default_str();
    exp->add_option("--side", side, "tate or decomposed")->capture_default_str();
    add_common(exp, common);
    exp->callback([&] { action = [&] { return run_export(common, what, degree, side); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }
    if (!action) return usage;
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const GroupError& e) {
        std::cerr << "group error: " << e.what() << "\n";
        return bad_input;
    } catch (const DegreeError& e) {
        std::cerr << "degree error: " << e.what() << "\n";
        return computation;
    } catch (const FieldMismatch& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return computation;
    } catch (const NotAbelian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return computation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
}
