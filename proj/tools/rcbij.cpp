// rcbij: command line front end for the KR crystal / rigged configuration library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcbij/energy.hpp"
#include "rcbij/io.hpp"
#include "rcbij/verify.hpp"

using nlohmann::json;
using namespace rcbij;

namespace {

enum Exit { kOk = 0, kDomain = 1, kVerification = 2 };

struct Failure : std::runtime_error {
    Failure(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
    std::string code;
};

struct Options {
    std::string family;
    int rank = -1;
    std::string factors;
    std::string weight;
    std::string in;
    std::string out;
    std::string tie = "smallest";
    std::string positions = "1";
    std::string suite = "all";
    std::string catalog = "default";
    unsigned threads = 0;
    bool trace = false;
    bool pretty = false;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw Failure("io-error", "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const Options& o, const json& doc) {
    std::string text = doc.dump(o.pretty ? 2 : -1);
    if (o.out.empty() || o.out == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Failure("io-error", "cannot write " + o.out);
    f << text << "\n";
}

AffineType type_from_flags(const Options& o) {
    if (o.family.empty() || o.rank < 0) throw Failure("usage", "--type and --rank are required");
    AffineType t;
    try {
        t = {family_from_name(o.family), o.rank};
    } catch (const std::invalid_argument& e) {
        throw Failure("usage", e.what());
    }
    if (!valid_type(t)) throw std::domain_error("rank out of range for " + o.family);
    return t;
}

std::vector<Factor> factors_from_flags(AffineType t, const Options& o) {
    if (o.factors.empty()) throw Failure("usage", "--factors is required");
    auto F = parse_factors(o.factors);
    for (auto f : F)
        if (!valid_factor(t, f.r, f.s)) throw std::domain_error("factor B^{r,s} outside the index set");
    return F;
}

TieBreak tie_of(const Options& o) {
    if (o.tie == "smallest") return TieBreak::Smallest;
    if (o.tie == "largest") return TieBreak::Largest;
    throw Failure("usage", "--tie-break must be smallest or largest");
}

json parsed(const std::string& text) { return json::parse(text); }

void require_highest(AffineType t, const Path& p) {
    if (!path_is_highest(t, p)) throw OffImage("path is not I_0-highest weight");
}

int cmd_phi(const Options& o) {
    auto [t, p] = path_from_json(read_input(o.in));
    require_highest(t, p);
    Ladder lad;
    RC rc = phi(t, p, o.trace ? &lad : nullptr, tie_of(o));
    json doc = parsed(rc_to_json(t, rc));
    if (o.trace) doc["ladder"] = parsed(ladder_to_json(t, lad))["ladder"];
    emit(o, doc);
    return kOk;
}

int cmd_phi_inv(const Options& o) {
    auto [t, rc] = rc_from_json(read_input(o.in));
    auto F = factors_from_flags(t, o);
    if (auto v = validate(t, rc, mult_of(F)))
        throw OffImage("configuration invalid at node " + std::to_string(v->a) + " length " + std::to_string(v->len) +
                       ": " + v->what);
    Ladder lad;
    Path p = phi_inv(t, rc, F, o.trace ? &lad : nullptr, tie_of(o));
    json doc = parsed(path_to_json(t, p));
    if (o.trace) doc["ladder"] = parsed(ladder_to_json(t, lad))["ladder"];
    emit(o, doc);
    return kOk;
}

int cmd_enum_paths(const Options& o) {
    AffineType t = type_from_flags(o);
    auto F = factors_from_flags(t, o);
    auto paths = o.weight.empty() ? enumerate_highest(t, F) : enumerate_highest(t, F, parse_weight(o.weight, t.n));
    json list = json::array();
    for (const auto& p : paths) list.push_back(parsed(path_to_json(t, p)));
    emit(o, {{"type", parsed(type_to_json(t))}, {"count", paths.size()}, {"paths", list}});
    return kOk;
}

int cmd_enum_rcs(const Options& o) {
    AffineType t = type_from_flags(o);
    auto F = factors_from_flags(t, o);
    Mult L = mult_of(F);
    std::vector<Weight> ws = o.weight.empty() ? candidate_weights(t, L) : std::vector<Weight>{parse_weight(o.weight, t.n)};
    json list = json::array();
    for (const auto& w : ws)
        for (const auto& rc : enumerate_rcs(t, L, w)) {
            json j = parsed(rc_to_json(t, rc));
            j["weight"] = parsed(weight_to_json(w));
            list.push_back(j);
        }
    emit(o, {{"type", parsed(type_to_json(t))},
             {"multiplicities", parsed(mult_to_json(L))},
             {"count", list.size()},
             {"rcs", list}});
    return kOk;
}

json frac_fields(const std::string& key, Frac v) {
    Frac d = v * Frac(2);
    json j;
    j[key + "2x"] = d.num;
    j[key] = static_cast<double>(v.num) / static_cast<double>(v.den);
    return j;
}

int cmd_energy(const Options& o) {
    auto [t, p] = path_from_json(read_input(o.in));
    EnergyValue e = energy(t, p);
    json doc = frac_fields("D", e.D);
    doc["provenance"] = e.independent ? "independent" : "via-Phi";
    emit(o, doc);
    return kOk;
}

int cmd_rmatrix(const Options& o) {
    auto [t, p] = path_from_json(read_input(o.in));
    int N = static_cast<int>(p.factors.size());
    std::stringstream ss(o.positions);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int i = 0;
        try {
            i = std::stoi(item);
        } catch (const std::exception&) {
            throw Failure("usage", "--positions expects integers");
        }
        // R_i swaps tensor positions i and i+1, counted from the right
        if (i < 1 || i >= N) throw std::domain_error("R_" + std::to_string(i) + " needs positions i, i+1 in 1.." + std::to_string(N));
        p = rmatrix(t, p, N - 1 - i);
    }
    emit(o, parsed(path_to_json(t, p)));
    return kOk;
}

json xm_entry(AffineType t, const std::vector<Factor>& F, const Weight& w, bool& equal) {
    XPolynomial X = x_polynomial(t, F, w);
    LaurentPoly M = m_polynomial(t, mult_of(F), w);
    bool eq = X.poly == M;
    equal = equal && eq;
    return {{"X", X.poly.str()},
            {"M", M.str()},
            {"equal", eq},
            {"provenance", X.independent ? "independent" : "via-Phi"}};
}

int cmd_xm(const Options& o) {
    AffineType t = type_from_flags(o);
    auto F = factors_from_flags(t, o);
    bool equal = true;
    json doc;
    if (!o.weight.empty()) {
        doc = xm_entry(t, F, parse_weight(o.weight, t.n), equal);
    } else {
        json list = json::array();
        for (const auto& w : candidate_weights(t, mult_of(F))) {
            json e = xm_entry(t, F, w, equal);
            e["weight"] = parsed(weight_to_json(w));
            list.push_back(e);
        }
        doc = {{"by_weight", list}, {"equal", equal}};
    }
    emit(o, doc);
    return equal ? kOk : kVerification;
}

int cmd_verify(const Options& o) {
    std::vector<Instance> cat;
    if (o.catalog == "default") cat = default_catalog();
    else if (o.catalog == "small") cat = small_catalog();
    else throw Failure("usage", "--catalog must be default or small");
    std::vector<Suite> suites;
    try {
        suites = parse_suites(o.suite);
    } catch (const std::invalid_argument& e) {
        throw Failure("usage", e.what());
    }
    Report r = verify(suites, cat, o.threads);
    std::string text = report_to_json(r, 2);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw Failure("io-error", "cannot write " + o.out);
        f << text << "\n";
        std::cout << parsed(text)["summary"].dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
    return r.failures() ? kVerification : kOk;
}

int cmd_describe(const Options& o) {
    AffineType t = type_from_flags(o);
    auto F = factors_from_flags(t, o);
    if (F.size() != 1) throw Failure("usage", "describe takes a single factor");
    const FactorSet& fs = factor_set(t, F[0].r, F[0].s);
    json comps = json::array();
    for (std::size_t c = 0; c < fs.comp_highest.size(); ++c) {
        Path hw{{F[0]}, {fs.elems[fs.comp_highest[c]]}};
        comps.push_back({{"weight", parsed(weight_to_json(fs.comp_weight[c]))},
                         {"highest", parsed(path_to_json(t, hw))["factors"][0]}});
    }
    Path mx{{F[0]}, {fs.maximal()}};
    emit(o, {{"type", parsed(type_to_json(t))},
             {"r", F[0].r},
             {"s", F[0].s},
             {"size", fs.elems.size()},
             {"decomposition", comps},
             {"maximal", parsed(path_to_json(t, mx))["factors"][0]}});
    return kOk;
}

void report_error(const std::string& code, const std::string& msg) {
    std::cerr << json{{"error", {{"code", code}, {"message", msg}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirillov-Reshetikhin crystals, rigged configurations and the bijection between them"};
    app.require_subcommand(1);
    Options o;

    auto add_type = [&](CLI::App* c) {
        c->add_option("--type", o.family, "affine family, e.g. D(1) or A(2)even");
        c->add_option("--rank", o.rank, "rank n");
    };
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_flag("--pretty", o.pretty, "indent the JSON output");
    };

    auto* phi_cmd = app.add_subcommand("phi", "path JSON -> rigged configuration JSON");
    phi_cmd->add_option("--in", o.in, "path JSON file (default stdin)");
    phi_cmd->add_flag("--trace", o.trace, "include the ladder of intermediate states");
    phi_cmd->add_option("--tie-break", o.tie, "smallest or largest node first among equal strings");
    add_out(phi_cmd);

    auto* inv_cmd = app.add_subcommand("phi-inv", "rigged configuration JSON -> path JSON");
    inv_cmd->add_option("--in", o.in, "rigged configuration JSON file (default stdin)");
    inv_cmd->add_option("--factors", o.factors, "factor list r,s;r,s;... left to right")->required();
    inv_cmd->add_flag("--trace", o.trace, "include the ladder of intermediate states");
    inv_cmd->add_option("--tie-break", o.tie, "smallest or largest node first among equal strings");
    add_out(inv_cmd);

    auto* ep_cmd = app.add_subcommand("enum-paths", "list highest weight paths");
    auto* er_cmd = app.add_subcommand("enum-rcs", "list rigged configurations");
    auto* xm_cmd = app.add_subcommand("xm", "compare the one-dimensional sum X with the fermionic sum M");
    for (auto* c : {ep_cmd, er_cmd, xm_cmd}) {
        add_type(c);
        c->add_option("--factors", o.factors, "factor list r,s;r,s;...")->required();
        c->add_option("--weight", o.weight, "classical weight as n comma separated integers");
        add_out(c);
    }

    auto* en_cmd = app.add_subcommand("energy", "intrinsic energy of a path");
    en_cmd->add_option("--in,--path", o.in, "path JSON file (default stdin)");
    add_out(en_cmd);

    auto* rm_cmd = app.add_subcommand("rmatrix", "apply combinatorial R-matrices to a path");
    rm_cmd->add_option("--in", o.in, "path JSON file (default stdin)");
    rm_cmd->add_option("--positions", o.positions, "i[,j,...]: R_i swaps tensor positions i and i+1 (1 = rightmost)");
    add_out(rm_cmd);

    auto* ve_cmd = app.add_subcommand("verify", "run verification suites over a catalog");
    ve_cmd->add_option("--suite", o.suite, "all or a comma list of bijection,xm,rmatrix,involution,virtual,commutation,convexity");
    ve_cmd->add_option("--catalog", o.catalog, "default or small");
    ve_cmd->add_option("--out", o.out, "report file");
    ve_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    auto* de_cmd = app.add_subcommand("describe", "classical decomposition and maximal element of B^{r,s}");
    add_type(de_cmd);
    de_cmd->add_option("--factors", o.factors, "single factor r,s")->required();
    add_out(de_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("usage", e.what());
        return kDomain;
    }

    try {
        if (*phi_cmd) return cmd_phi(o);
        if (*inv_cmd) return cmd_phi_inv(o);
        if (*ep_cmd) return cmd_enum_paths(o);
        if (*er_cmd) return cmd_enum_rcs(o);
        if (*en_cmd) return cmd_energy(o);
        if (*rm_cmd) return cmd_rmatrix(o);
        if (*xm_cmd) return cmd_xm(o);
        if (*ve_cmd) return cmd_verify(o);
        if (*de_cmd) return cmd_describe(o);
    } catch (const Failure& e) {
        report_error(e.code, e.what());
    } catch (const FormatError& e) {
        report_error("malformed-json", e.what());
    } catch (const OffImage& e) {
        report_error("off-image", e.what());
    } catch (const BudgetExceeded& e) {
        report_error("budget-exceeded", e.what());
    } catch (const std::domain_error& e) {
        report_error("domain-error", e.what());
    } catch (const std::invalid_argument& e) {
        report_error("domain-error", e.what());
    } catch (const std::exception& e) {
        report_error("internal-error", e.what());
    }
    return kDomain;
}
