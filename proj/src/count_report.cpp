#include "invenum/count_report.hpp"

#include <sstream>

#include <json.hpp>

namespace invenum {

std::string CountReport::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json pats = nlohmann::ordered_json::array();
    {
        std::istringstream in(patterns);
        std::string tok;
        while (std::getline(in, tok, ','))
            pats.push_back(tok);
    }
    j["patterns"] = pats;
    j["method"] = method;
    nlohmann::ordered_json terms_json = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        nlohmann::ordered_json t;
        t["k"] = k_min + static_cast<long long>(i);
        t["value"] = terms[i].get_str();
        terms_json.push_back(t);
    }
    j["terms"] = terms_json;
    j["mismatches"] = mismatches;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string CountReport::to_csv() const {
    std::ostringstream out;
    out << "k,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
        out << (k_min + static_cast<long long>(i)) << ',' << terms[i].get_str() << '\n';
    return out.str();
}

std::string CountReport::to_plain() const {
    std::ostringstream out;
    out << "# patterns: " << (patterns.empty() ? "(none)" : patterns)
        << "  method: " << method << '\n';
    for (std::size_t i = 0; i < terms.size(); ++i)
        out << "k=" << (k_min + static_cast<long long>(i)) << '\t' << terms[i].get_str() << '\n';
    for (const auto& m : mismatches)
        out << "MISMATCH: " << m << '\n';
    return out.str();
}

} // namespace invenum
