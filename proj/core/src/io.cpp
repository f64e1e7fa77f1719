#include "rcbij/io.hpp"

#include <sstream>

#include "json.hpp"

namespace rcbij {

using nlohmann::json;

namespace {

json type_json(AffineType t) { return {{"family", family_name(t.family)}, {"rank", t.n}}; }

AffineType type_of(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("rank"))
        throw FormatError("type must be an object with family and rank");
    AffineType t;
    try {
        t = {family_from_name(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    } catch (const json::exception& e) {
        throw FormatError(std::string("type: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    if (!valid_type(t)) throw std::domain_error("rank out of range for " + family_name(t.family));
    return t;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what());
    }
}

std::string dump(const json& j, int indent) { return j.dump(indent, ' ', false); }

// One native factor element as rows or spin signs.
json element_json(AffineType native, int r, int s, const Word& w) {
    json j = {{"r", r}, {"s", s}};
    if (is_spin_factor(native, r)) {
        json signs = json::array();
        for (int i = 0; i < native.n; ++i) {
            json row = json::array();
            for (int c = 0; c < s; ++c) row.push_back((spin_mask(w[c]) >> i) & 1 ? -1 : 1);
            signs.push_back(row);
        }
        j["signs"] = signs;
    } else {
        j["rows"] = word_to_grid(w, r, s);
    }
    return j;
}

Word element_of(AffineType native, int r, int s, const json& j) {
    try {
        if (is_spin_factor(native, r)) {
            const json& signs = j.at("signs");
            if (static_cast<int>(signs.size()) != native.n) throw FormatError("spin grid needs n rows");
            Word w(s, 0);
            for (int c = 0; c < s; ++c) {
                std::uint32_t mask = 0;
                for (int i = 0; i < native.n; ++i) {
                    int v = signs.at(i).at(c).get<int>();
                    if (v != 1 && v != -1) throw FormatError("spin signs must be 1 or -1");
                    if (v < 0) mask |= 1u << i;
                }
                w[c] = spin_atom(mask);
            }
            return w;
        }
        auto grid = j.at("rows").get<std::vector<std::vector<Atom>>>();
        if (static_cast<int>(grid.size()) != r) throw FormatError("rows: expected r rows");
        for (const auto& row : grid)
            if (static_cast<int>(row.size()) != s) throw FormatError("rows: expected s entries per row");
        return grid_to_word(grid);
    } catch (const json::exception& e) {
        throw FormatError(std::string("factor: ") + e.what());
    }
}

json path_json(AffineType t, const Path& p) {
    json factors = json::array();
    AffineType amb = is_folded(t.family) ? ambient_type(t) : t;
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
        auto [r, s] = p.factors[k];
        if (!is_folded(t.family)) {
            factors.push_back(element_json(t, r, s, p.elems[k]));
            continue;
        }
        json parts = json::array();
        std::size_t at = 0;
        for (auto [rr, ss] : ambient_factors(t, r, s)) {
            std::size_t len = static_cast<std::size_t>(word_length(amb, rr, ss));
            Word w(p.elems[k].begin() + at, p.elems[k].begin() + at + len);
            parts.push_back(element_json(amb, rr, ss, w));
            at += len;
        }
        factors.push_back({{"r", r}, {"s", s}, {"ambient", parts}});
    }
    return {{"type", type_json(t)}, {"factors", factors}};
}

json rc_json(AffineType t, const RC& rc) {
    json nu = json::array(), rig = json::array();
    for (int a = 1; a <= t.n; ++a) {
        json rows = json::array(), rigs = json::array();
        if (a < static_cast<int>(rc.nu.size()))
            for (const auto& st : rc.nu[a]) {
                rows.push_back(st.len);
                rigs.push_back(st.rig2);
            }
        nu.push_back(rows);
        rig.push_back(rigs);
    }
    return {{"type", type_json(t)}, {"nu", nu}, {"rigging2x", rig}};
}

}  // namespace

std::string type_to_json(AffineType t) { return type_json(t).dump(); }

AffineType type_from_json(const std::string& text) { return type_of(parse(text)); }

std::string path_to_json(AffineType t, const Path& p, int indent) { return dump(path_json(t, p), indent); }

std::pair<AffineType, Path> path_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("type") || !j.contains("factors")) throw FormatError("path needs type and factors");
    AffineType t = type_of(j["type"]);
    AffineType amb = is_folded(t.family) ? ambient_type(t) : t;
    Path p;
    try {
        for (const json& f : j.at("factors")) {
            int r = f.at("r").get<int>(), s = f.at("s").get<int>();
            if (!valid_factor(t, r, s)) throw std::domain_error("factor outside the index set");
            p.factors.push_back({r, s});
            if (!is_folded(t.family)) {
                p.elems.push_back(element_of(t, r, s, f));
                continue;
            }
            const json& parts = f.at("ambient");
            auto specs = ambient_factors(t, r, s);
            if (parts.size() != specs.size()) throw FormatError("ambient factor list has the wrong length");
            Word w;
            for (std::size_t k = 0; k < specs.size(); ++k) {
                if (parts[k].at("r").get<int>() != specs[k].first || parts[k].at("s").get<int>() != specs[k].second)
                    throw FormatError("ambient factor shapes do not match the embedding");
                Word part = element_of(amb, specs[k].first, specs[k].second, parts[k]);
                w.insert(w.end(), part.begin(), part.end());
            }
            p.elems.push_back(w);
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("path: ") + e.what());
    }
    if (!path_valid(t, p)) throw std::domain_error("path: an element is outside its KR crystal");
    return {t, p};
}

std::string rc_to_json(AffineType t, const RC& rc, int indent) { return dump(rc_json(t, rc), indent); }

std::pair<AffineType, RC> rc_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("type") || !j.contains("nu")) throw FormatError("rc needs type and nu");
    AffineType t = type_of(j["type"]);
    RC rc = empty_rc(t.n);
    try {
        const json& nu = j.at("nu");
        json rig = j.contains("rigging2x") ? j.at("rigging2x") : json();
        if (static_cast<int>(nu.size()) != t.n) throw FormatError("nu needs one partition per classical node");
        for (int a = 1; a <= t.n; ++a) {
            const json& rows = nu[a - 1];
            for (std::size_t k = 0; k < rows.size(); ++k) {
                int len = rows[k].get<int>();
                if (len <= 0) throw FormatError("row lengths must be positive");
                int r2 = rig.is_null() ? 0 : rig.at(a - 1).at(k).get<int>();
                rc.nu[a].push_back({len, r2});
            }
            if (!rig.is_null() && rig.at(a - 1).size() != rows.size())
                throw FormatError("rigging2x shape differs from nu");
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("rc: ") + e.what());
    }
    normalize(rc);
    return {t, rc};
}

std::string mult_to_json(const Mult& L) {
    json j = json::object();
    for (auto [f, c] : L)
        if (c) j[std::to_string(f.r) + "," + std::to_string(f.s)] = c;
    return j.dump();
}

std::string weight_to_json(const Weight& w) {
    json j = json::array();
    for (std::size_t a = 1; a < w.size(); ++a) j.push_back(w[a]);
    return j.dump();
}

std::string ladder_to_json(AffineType t, const Ladder& ladder, int indent) {
    json steps = json::array();
    for (const auto& st : ladder.steps) {
        json sel = json::array();
        for (const auto& x : st.selections) sel.push_back({{"node", x.node}, {"length", x.len}});
        json js = {{"path", path_json(t, st.path)["factors"]}, {"rc", rc_json(t, st.rc)}};
        js["rc"].erase("type");
        if (!st.path_op.empty()) js["path_op"] = st.path_op;
        if (!st.rc_op.empty()) js["rc_op"] = st.rc_op;
        if (!sel.empty()) js["markers"] = sel;
        steps.push_back(js);
    }
    return dump({{"type", type_json(t)}, {"ladder", steps}}, indent);
}

std::vector<Factor> parse_factors(const std::string& spec) {
    std::vector<Factor> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        Factor f;
        char comma = 0;
        std::stringstream is(item);
        if (!(is >> f.r >> comma >> f.s) || comma != ',' || f.r < 1 || f.s < 1)
            throw FormatError("factor list: expected r,s;r,s;... with positive entries");
        out.push_back(f);
    }
    if (out.empty()) throw FormatError("factor list is empty");
    return out;
}

Weight parse_weight(const std::string& spec, int n) {
    Weight w(n + 1, 0);
    std::stringstream ss(spec);
    std::string item;
    int a = 1;
    while (std::getline(ss, item, ',')) {
        if (a > n) throw FormatError("weight has more than n entries");
        try {
            w[a++] = std::stoi(item);
        } catch (const std::exception&) {
            throw FormatError("weight entries must be integers");
        }
    }
    if (a != n + 1) throw FormatError("weight needs exactly n entries");
    return w;
}

}  // namespace rcbij
