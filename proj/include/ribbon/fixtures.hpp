#pragma once

// Loaders for the tabulated reference data in data/ and SHA-256 guards against
// accidental edits of those files.

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "ribbon/code.hpp"
#include "ribbon/error.hpp"
#include "ribbon/laurent.hpp"
#include "ribbon/obstruction.hpp"

namespace ribbon {

namespace fs = std::filesystem;

inline fs::path default_data_dir()
{
#ifdef RIBBON_DATA_DIR
    return fs::path(RIBBON_DATA_DIR);
#else
    return fs::path("data");
#endif
}

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == sep && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Rows of a delimited file with a header line; '#' comments and blank lines skipped.
inline std::vector<std::map<std::string, std::string>> read_table(const fs::path& path, char sep)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::vector<std::string> header;
    std::vector<std::map<std::string, std::string>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        auto fields = split(line, sep);
        if (header.empty()) {
            header = std::move(fields);
            continue;
        }
        if (fields.size() != header.size()) {
            throw DataError(path.filename().string() + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
        }
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = fields[i];
        row["#line"] = std::to_string(lineno);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline const std::string& field(const std::map<std::string, std::string>& row, const std::string& key)
{
    auto it = row.find(key);
    if (it == row.end()) throw DataError("missing column '" + key + "'");
    return it->second;
}

inline long to_long(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DataError("bad integer for " + what + ": '" + s + "'");
    }
}

inline std::optional<int> optional_int(const std::string& s, const std::string& what)
{
    if (s.empty()) return std::nullopt;
    return static_cast<int>(to_long(s, what));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial tables: det, alexander, half (alternatives separated by '|')

struct PolyRow {
    Coeff det = 0;
    CanonicalPoly alexander;
    std::vector<LaurentPoly> halves;
};

inline std::vector<PolyRow> load_poly_table(const fs::path& path)
{
    std::vector<PolyRow> out;
    for (const auto& row : detail::read_table(path, '\t')) {
        PolyRow r;
        r.det = detail::to_long(detail::field(row, "det"), "det");
        r.alexander = canonicalize(parse_poly(detail::field(row, "alexander")));
        for (const auto& h : detail::split(detail::field(row, "half"), '|')) r.halves.push_back(parse_poly(h));
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Code table: structure, code, alexander, det

struct CodeRow {
    std::string structure;
    std::string code_text;
    RibbonCode code;
    CanonicalPoly alexander;
    Coeff det = 0;
};

inline std::vector<CodeRow> load_code_table(const fs::path& path)
{
    std::vector<CodeRow> out;
    for (const auto& row : detail::read_table(path, '\t')) {
        CodeRow r;
        r.structure = detail::field(row, "structure");
        r.code_text = detail::field(row, "code");
        r.code = parse_code(r.code_text);
        r.alexander = canonicalize(parse_poly(detail::field(row, "alexander")));
        r.det = detail::to_long(detail::field(row, "det"), "det");
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Knot CSV: name, det, alexander, genus, crosscap, genus4, upper ("v:source;v:source")

inline std::vector<UpperBound> parse_uppers(const std::string& s)
{
    std::vector<UpperBound> out;
    if (s.empty()) return out;
    for (const auto& item : detail::split(s, ';')) {
        const auto colon = item.find(':');
        const std::string v = detail::trim(item.substr(0, colon));
        const std::string src = colon == std::string::npos ? "" : detail::trim(item.substr(colon + 1));
        out.push_back({static_cast<int>(detail::to_long(v, "upper bound")), src});
    }
    return out;
}

inline std::vector<KnotRecord> load_knots(const fs::path& path)
{
    static const std::vector<std::string> known = {"name", "det", "alexander", "genus", "crosscap", "genus4", "upper"};
    std::vector<KnotRecord> out;
    for (const auto& row : detail::read_table(path, ',')) {
        const std::string where = path.filename().string() + ":" + row.at("#line");
        try {
            KnotRecord k;
            k.name = detail::field(row, "name");
            if (k.name.empty()) throw DataError("empty name");
            k.determinant = detail::to_long(detail::field(row, "det"), "det");
            const LaurentPoly d = parse_poly(detail::field(row, "alexander"));
            if (d.is_zero()) throw DataError("zero Alexander polynomial");
            k.alexander = canonicalize(d);
            k.genus = static_cast<int>(detail::to_long(detail::field(row, "genus"), "genus"));
            k.crosscap = detail::optional_int(detail::field(row, "crosscap"), "crosscap");
            k.genus4 = detail::optional_int(detail::field(row, "genus4"), "genus4");
            k.uppers = parse_uppers(detail::field(row, "upper"));
            for (const auto& [key, value] : row) {
                if (key != "#line" && std::find(known.begin(), known.end(), key) == known.end()) k.extra[key] = value;
            }
            if (auto it = k.extra.find("nontrivial"); it != k.extra.end()) k.nontrivial = it->second == "1" || it->second == "true";
            validate_record(k);
            out.push_back(std::move(k));
        } catch (const ParseError& e) {
            throw DataError(where + ": " + e.what());
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checksums (sha256sum format: "<hex>  <file>")

inline std::string sha256_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 8192> buf{};
    while (in.read(buf.data(), buf.size()) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, md.data(), &len);
    EVP_MD_CTX_free(ctx);
    std::string hex;
    char byte[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(byte, sizeof byte, "%02x", md[i]);
        hex += byte;
    }
    return hex;
}

/// Problems found comparing data files against CHECKSUMS; empty when all match.
inline std::vector<std::string> verify_checksums(const fs::path& dir)
{
    std::vector<std::string> problems;
    std::ifstream in(dir / "CHECKSUMS");
    if (!in) return {"missing " + (dir / "CHECKSUMS").string()};
    std::string line;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        std::istringstream ls(line);
        std::string expected, name;
        ls >> expected >> name;
        const fs::path file = dir / name;
        if (!fs::exists(file)) {
            problems.push_back("missing fixture " + name);
            continue;
        }
        if (sha256_file(file) != expected) problems.push_back("fixture drift: " + name + " does not match its checksum");
    }
    return problems;
}

/// Throws DataError unless every fixture matches its recorded checksum.
inline void require_fixtures(const fs::path& dir)
{
    const auto problems = verify_checksums(dir);
    if (problems.empty()) return;
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw DataError(msg);
}

}  // namespace ribbon
