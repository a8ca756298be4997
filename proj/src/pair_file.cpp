#include "spinsqueeze/pair_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spinsqueeze::pairfile {

using nlohmann::json;

shorttime::PairCouplingSet parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw invalid_pairset_error(std::string("pair file is not valid JSON: ") + e.what());
    }
    try {
        shorttime::PairCouplingSet ps;
        ps.n = doc.at("n").get<int>();
        for (const auto& jterm : doc.at("terms")) {
            shorttime::PairTerm term;
            term.k = jterm.at("k").get<int>();
            term.l = jterm.at("l").get<int>();
            const auto& m = jterm.at("m");
            if (m.size() != 3) throw invalid_pairset_error("pair term m must be 3x3");
            for (int r = 0; r < 3; ++r) {
                const auto& row = m.at(static_cast<std::size_t>(r));
                if (row.size() != 3) throw invalid_pairset_error("pair term m must be 3x3");
                for (int c = 0; c < 3; ++c) {
                    term.m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
                }
            }
            ps.terms.push_back(term);
        }
        shorttime::validate(ps);
        return ps;
    } catch (const json::exception& e) {
        throw invalid_pairset_error(std::string("pair file schema violation: ") + e.what());
    }
}

shorttime::PairCouplingSet load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw invalid_pairset_error("cannot open pair file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string to_json(const shorttime::PairCouplingSet& ps) {
    json doc;
    doc["n"] = ps.n;
    doc["terms"] = json::array();
    for (const auto& term : ps.terms) {
        json jt;
        jt["k"] = term.k;
        jt["l"] = term.l;
        jt["m"] = json::array();
        for (int r = 0; r < 3; ++r) {
            json row = json::array();
            for (int c = 0; c < 3; ++c) row.push_back(term.m(r, c));
            jt["m"].push_back(row);
        }
        doc["terms"].push_back(jt);
    }
    return doc.dump(2);
}

} // namespace spinsqueeze::pairfile
