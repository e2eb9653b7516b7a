#include "pctk/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pctk {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw input_error("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw input_error("trailing characters in '" + s + "'");
    return v;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const std::string& part : split(s, ',')) out.push_back(parse_int(part));
    return out;
}

}  // namespace

std::string to_text(const RSet& rs) {
    if (rs.r() == 0) return "-";
    return join(rs.dividers(), ",");
}

RSet parse_rset(int n, const std::string& s) {
    if (s.empty() || s == "-") return RSet::empty(n);
    return RSet(n, parse_ints(s));
}

std::string to_text(const RTuple& t) {
    std::string s;
    for (int h = 1; h <= t.rset().r() + 1; ++h) {
        if (h > 1) s += ";";
        s += join(t.cohort(h), ",");
    }
    return s;
}

RTuple parse_rtuple(const std::string& s) {
    std::vector<int> entries, dividers;
    for (const std::string& group : split(s, ';')) {
        for (int v : parse_ints(group)) entries.push_back(v);
        dividers.push_back(static_cast<int>(entries.size()));
    }
    dividers.pop_back();
    return RTuple(RSet(static_cast<int>(entries.size()), dividers), entries);
}

std::string to_text(const Partition& p) { return join(p.parts(), ","); }

Partition parse_partition(const std::string& s) {
    std::vector<int> parts = parse_ints(s);
    return Partition(static_cast<int>(parts.size()), parts);
}

std::string to_text(const RChain& c) {
    std::string s;
    for (int h = 0; h <= c.rset().r() + 1; ++h) {
        if (h > 0) s += " < ";
        s += c.block(h).empty() ? "-" : join(c.block(h), ",");
    }
    return s;
}

std::string gchain_text(const GChain& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " > ";
        s += c[i].empty() ? "-" : join(c[i], ",");
    }
    return s;
}

std::string shape_tuple_text(const ShapeTuple& mu) {
    std::string s;
    for (std::size_t h = 0; h < mu.size(); ++h) {
        if (h) s += " ";
        std::vector<int> trimmed;
        for (int v : mu[h])
            if (v > 0) trimmed.push_back(v);
        s += "(" + join(trimmed, ",") + ")";
    }
    return s;
}

std::string to_grid(const Tableau& t) {
    const Partition& sh = t.shape();
    std::size_t w = 1;
    for (int v : t.flatten()) w = std::max(w, std::to_string(v).size());
    std::string s;
    for (int i = 1; i <= sh.n() && sh.part(i) > 0; ++i) {
        for (int j = 1; j <= sh.part(i); ++j) {
            if (j > 1) s += " ";
            std::string cell = std::to_string(t.value(j, i));
            s += std::string(w - cell.size(), ' ') + cell;
        }
        s += "\n";
    }
    return s;
}

std::string rtuple_to_json(const RTuple& t) {
    nlohmann::ordered_json j;
    j["n"] = t.rset().n();
    j["r"] = t.rset().dividers();
    j["entries"] = t.entries();
    return j.dump();
}

RTuple rtuple_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        RSet rs(j.at("n").get<int>(), j.at("r").get<std::vector<int>>());
        return RTuple(rs, j.at("entries").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad tuple json: ") + e.what());
    }
}

std::string tableau_to_json(const Tableau& t) {
    nlohmann::ordered_json j;
    j["n"] = t.shape().n();
    j["lambda"] = t.shape().parts();
    j["columns"] = t.columns();
    return j.dump();
}

Tableau tableau_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        Partition shape(j.at("n").get<int>(),
                        j.at("lambda").get<std::vector<int>>());
        return Tableau(shape, j.at("columns").get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad tableau json: ") + e.what());
    }
}

std::string chain_to_json(const RChain& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n();
    j["blocks"] = c.blocks();
    return j.dump();
}

RChain chain_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        int n = j.at("n").get<int>();
        auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        if (blocks.size() < 2) throw input_error("a chain needs both endpoints");
        std::vector<int> dividers;
        for (std::size_t h = 1; h + 1 < blocks.size(); ++h)
            dividers.push_back(static_cast<int>(blocks[h].size()));
        return RChain(RSet(n, dividers), blocks);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad chain json: ") + e.what());
    }
}

}  // namespace pctk
