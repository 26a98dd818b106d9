#pragma once

#include "k3dn/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace k3dn {

// A "# fixture format version N" comment line declares the format; other versions are rejected.
inline constexpr int kFormatVersion = 1;

// Sectioned text files: '#' comments, [section] headers, key = value lines.
// Values are either scalars or bracketed, comma separated, possibly nested lists.

struct ParseError : Error {
    ParseError(const std::string& source, int line, int col, const std::string& msg);
    int line, col;
};

struct Value {
    bool is_list = false;
    std::string scalar;
    std::vector<Value> items;
    int line = 0, col = 0;

    std::string str() const;
};

struct Entry {
    std::string key;
    std::string raw;
    int line = 0, col = 0;
};

struct Section {
    std::string name;
    std::vector<Entry> entries;
    int line = 0;

    const Entry* find(const std::string& key) const;
    std::vector<const Entry*> find_all(const std::string& key) const;
};

class Document {
public:
    static Document parse(const std::string& text, const std::string& source = "<input>");
    static Document load(const std::string& path);

    const std::string& source() const { return source_; }
    const std::vector<Section>& sections() const { return sections_; }
    const Section* find(const std::string& name) const;
    const Section& require(const std::string& name) const;
    const Entry& require(const std::string& section, const std::string& key) const;

    Value value(const Entry& e) const;
    [[noreturn]] void fail(const Entry& e, const std::string& msg) const;
    [[noreturn]] void fail(int line, const std::string& msg) const;

    // strict mode: every key of every section must be in allowed (section -> keys, "*" = any key)
    void check_keys(const std::vector<std::pair<std::string, std::vector<std::string>>>& allowed,
                    bool strict, std::vector<std::string>* warnings) const;

    Int get_int(const Entry& e) const;
    Rat get_rat(const Entry& e) const;
    std::vector<Int> get_int_vector(const Entry& e) const;
    std::vector<Rat> get_rat_vector(const Entry& e) const;
    std::vector<std::string> get_string_list(const Entry& e) const;
    IntegerMatrix get_int_matrix(const Entry& e) const;
    std::vector<std::vector<Rat>> get_rat_matrix(const Entry& e) const;

private:
    std::string source_;
    std::vector<Section> sections_;
};

Value parse_value(const std::string& text, const std::string& source = "<input>", int line = 0, int col = 1);

}  // namespace k3dn
