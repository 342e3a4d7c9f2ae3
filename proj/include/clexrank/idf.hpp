#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clexrank {

/// Term -> inverse document frequency. Unseen terms get default_idf, which is
/// the largest idf in the table.
class IdfTable {
public:
    IdfTable() = default;
    explicit IdfTable(std::unordered_map<std::string, double> values);

    /// idf(t) = ln(N / df(t)) over the given tokenized documents.
    static IdfTable from_documents(std::span<const std::vector<std::string>> documents);

    double lookup(std::string_view term) const;
    double default_idf() const { return default_idf_; }
    std::size_t size() const { return values_.size(); }
    bool contains(std::string_view term) const;

private:
    std::unordered_map<std::string, double> values_;
    // An empty table degrades TF-IDF to plain TF.
    double default_idf_ = 1.0;
};

IdfTable parse_idf_table(std::istream& in);
IdfTable load_idf_table(const std::filesystem::path& path);

}  // namespace clexrank
