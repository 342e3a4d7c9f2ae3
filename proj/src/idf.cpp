#include "clexrank/idf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "clexrank/errors.hpp"

namespace clexrank {

IdfTable::IdfTable(std::unordered_map<std::string, double> values) : values_(std::move(values)) {
    if (values_.empty()) return;
    default_idf_ = 0.0;
    for (const auto& [term, idf] : values_) {
        if (!(idf >= 0.0) || !std::isfinite(idf)) {
            throw ValidationError("idf for term '" + term + "' must be a finite value >= 0");
        }
        default_idf_ = std::max(default_idf_, idf);
    }
}

IdfTable IdfTable::from_documents(std::span<const std::vector<std::string>> documents) {
    std::unordered_map<std::string, std::size_t> df;
    for (const auto& doc : documents) {
        std::unordered_set<std::string_view> seen(doc.begin(), doc.end());
        for (auto term : seen) ++df[std::string(term)];
    }
    std::unordered_map<std::string, double> values;
    const double n = static_cast<double>(documents.size());
    for (const auto& [term, count] : df) values.emplace(term, std::log(n / static_cast<double>(count)));
    return IdfTable(std::move(values));
}

double IdfTable::lookup(std::string_view term) const {
    auto it = values_.find(std::string(term));
    return it == values_.end() ? default_idf_ : it->second;
}

bool IdfTable::contains(std::string_view term) const {
    return values_.find(std::string(term)) != values_.end();
}

IdfTable parse_idf_table(std::istream& in) {
    std::unordered_map<std::string, double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        // Tab is the documented separator; a single space is tolerated.
        auto sep = line.find('\t');
        if (sep == std::string::npos) sep = line.rfind(' ');
        if (sep == std::string::npos || sep == 0) {
            throw ParseError("idf line " + std::to_string(line_no) + ": expected term<TAB>idf");
        }
        std::string term = line.substr(0, sep);
        std::string value = line.substr(sep + 1);
        double idf = 0.0;
        std::istringstream vs(value);
        if (!(vs >> idf) || !(vs >> std::ws).eof()) {
            throw ParseError("idf line " + std::to_string(line_no) + ": bad number '" + value + "'");
        }
        if (idf < 0.0) {
            throw ValidationError("idf line " + std::to_string(line_no) + ": negative idf for '" +
                                  term + "'");
        }
        values[term] = idf;
    }
    return IdfTable(std::move(values));
}

IdfTable load_idf_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open idf file " + path.string());
    return parse_idf_table(in);
}

}  // namespace clexrank
