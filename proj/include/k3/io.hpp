#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3/enumerate.hpp"
#include "k3/f2.hpp"
#include "k3/perm.hpp"

namespace k3 {

/// Bundled data directory: K3TK_DATA_DIR overrides the compiled-in
/// default.
inline std::string data_dir() {
    if (const char* env = std::getenv("K3TK_DATA_DIR")) return env;
#ifdef K3_DEFAULT_DATA_DIR
    return K3_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

/// Parses "2^6.3^2.5.7" into 20160.
inline long long parse_order_string(const std::string& text) {
    long long n = 1;
    std::istringstream ss(text);
    std::string tok;
    bool any = false;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty()) throw std::invalid_argument("parse_order_string: empty factor in " + text);
        long long base = 0, exp = 1;
        std::size_t caret = tok.find('^');
        base = std::stoll(tok.substr(0, caret));
        if (caret != std::string::npos) exp = std::stoll(tok.substr(caret + 1));
        if (base < 1 || exp < 1) throw std::invalid_argument("parse_order_string: bad factor " + tok);
        for (long long i = 0; i < exp; ++i) n *= base;
        any = true;
    }
    if (!any) throw std::invalid_argument("parse_order_string: empty string");
    return n;
}

/// Prime-power product string, ascending primes: 20160 -> "2^6.3^2.5.7".
inline std::string format_order_string(long long n) {
    if (n < 1) throw std::invalid_argument("format_order_string: n must be positive");
    if (n == 1) return "1";
    std::string out;
    for (long long q = 2; n > 1; ++q)
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) { n /= q; ++e; }
            if (!out.empty()) out += ".";
            out += std::to_string(q);
            if (e > 1) out += "^" + std::to_string(e);
        }
    return out;
}

/// Parses a lattice multiset in either style: "A_2A_4A_4A_6D_4" or
/// "A2,A4,A4,A6,D4".
inline SingConfig parse_config(const std::string& text) {
    std::vector<AdeType> types;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        auto t = parse_ade(tok);
        if (!t) throw std::invalid_argument("unknown lattice token \"" + tok + "\"");
        types.push_back(*t);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            flush();
            continue;
        }
        if ((ch == 'A' || ch == 'D' || ch == 'E') && !tok.empty()) flush();
        tok += ch;
    }
    flush();
    if (types.empty()) throw std::invalid_argument("parse_config: no lattice tokens in \"" + text + "\"");
    return SingConfig(std::move(types));
}

/// Loads the bundled transcription of the List: lines of
/// "<order string> <lattice multiset>", '#' comments allowed.
inline std::vector<ListEntry> load_table2(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file " + path);
    std::vector<ListEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string order_tok, lattice_tok, rest;
        if (!(ss >> order_tok)) continue;
        if (!(ss >> lattice_tok) || (ss >> rest))
            throw std::runtime_error("malformed line " + std::to_string(lineno) + " in " + path);
        try {
            entries.push_back(ListEntry{parse_order_string(order_tok), parse_config(lattice_tok)});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("malformed line " + std::to_string(lineno) + " in " + path +
                                     ": " + e.what());
        }
    }
    return entries;
}

/// Diff of an enumeration result against the bundled transcription.
inline DiffReport verify_table2(const std::vector<ListEntry>& entries,
                                const std::string& path = data_dir() + "/table2.txt") {
    return diff_entries(entries, load_table2(path));
}

/// A named group given by generators; images are 1-based in files.
struct GroupFile {
    std::string name;
    int degree = 0;
    std::vector<Permutation> generators;
};

/// Format: "name <token>", "degree <n>", then one "gen <img1> ... <imgn>"
/// line per generator.
inline GroupFile load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file " + path);
    GroupFile g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        auto fail = [&](const std::string& why) -> std::runtime_error {
            return std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
        };
        if (key == "name") {
            if (!(ss >> g.name)) throw fail("missing group name");
        } else if (key == "degree") {
            if (!(ss >> g.degree) || g.degree < 1 || g.degree > kMaxDegree)
                throw fail("degree must be in [1,64]");
        } else if (key == "gen") {
            if (g.degree == 0) throw fail("gen before degree");
            std::vector<int> images;
            int v;
            while (ss >> v) images.push_back(v - 1);
            if (static_cast<int>(images.size()) != g.degree)
                throw fail("generator image count does not match degree");
            try {
                g.generators.push_back(Permutation::from_images(images));
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
        } else {
            throw fail("unknown directive \"" + key + "\"");
        }
    }
    if (g.degree == 0) throw std::runtime_error(path + ": no degree line");
    return g;
}

/// Loads the construction constants ("mat <name> <rows>", "vec <name>
/// <bits>") into the same structure the compiled-in defaults use.
inline P511Constants load_p511_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open constants file " + path);
    std::map<std::string, F2Mat4> mats;
    std::map<std::string, F2Vec4> vecs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string kind, name, value;
        if (!(ss >> kind >> name >> value))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed line");
        if (kind == "mat") {
            auto m = parse_f2mat(value);
            if (!m) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad matrix");
            mats[name] = *m;
        } else if (kind == "vec") {
            auto v = parse_f2vec(value);
            if (!v) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad vector");
            vecs[name] = *v;
        } else {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown kind " + kind);
        }
    }
    auto mat = [&](const char* n) {
        auto it = mats.find(n);
        if (it == mats.end()) throw std::runtime_error(path + ": missing matrix " + n);
        return it->second;
    };
    auto vec = [&](const char* n) {
        auto it = vecs.find(n);
        if (it == vecs.end()) throw std::runtime_error(path + ": missing vector " + n);
        return it->second;
    };
    P511Constants k;
    k.xviii_x = mat("p511_xviii_x");
    k.xviii_y = mat("p511_xviii_y");
    k.xx_x = mat("p511_xx_x");
    k.xx_y = mat("p511_xx_y");
    k.a = vec("vec_a");
    k.a_prime = vec("vec_a_prime");
    k.b = vec("vec_b");
    k.c = vec("vec_c");
    return k;
}

}  // namespace k3
