#include "qap/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

namespace qap {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Splits the stream into whitespace-separated tokens, dropping comment lines.
std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos < line.size() && line[pos] == '#') continue;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            tokens.push_back({line.substr(start, pos - start), lineno, static_cast<int>(start) + 1});
        }
    }
    return tokens;
}

}  // namespace

ExactMatrix read_matrix(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.empty()) throw ParseError("empty matrix file", 1, 1);
    long n = 0;
    try {
        std::size_t used = 0;
        n = std::stol(tokens[0].text, &used);
        if (used != tokens[0].text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("expected dimension n, got '" + tokens[0].text + "'", tokens[0].line, tokens[0].column);
    }
    if (n < 1) throw ParseError("dimension must be >= 1", tokens[0].line, tokens[0].column);
    const std::size_t need = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (tokens.size() < need) {
        const auto& last = tokens.back();
        throw ParseError("matrix has too few entries: expected " + std::to_string(need - 1) + ", got " +
                             std::to_string(tokens.size() - 1),
                         last.line, last.column);
    }
    if (tokens.size() > need) {
        const auto& extra = tokens[need];
        throw ParseError("unexpected trailing token '" + extra.text + "'", extra.line, extra.column);
    }
    ExactMatrix m(static_cast<int>(n));
    std::size_t k = 1;
    for (int i = 1; i <= n; ++i) {
        const int row_line = tokens[k].line;
        int row_count = 0;
        for (int j = 1; j <= n; ++j, ++k) {
            if (tokens[k].line != row_line) {
                throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row_count) +
                                     " entries, expected " + std::to_string(n),
                                 row_line, 1);
            }
            try {
                m.at(i, j) = parse_rational(tokens[k].text);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), tokens[k].line, tokens[k].column);
            }
            ++row_count;
        }
        if (k < tokens.size() && tokens[k].line == row_line) {
            throw ParseError("row " + std::to_string(i) + " has more than " + std::to_string(n) + " entries",
                             tokens[k].line, tokens[k].column);
        }
    }
    return m;
}

ExactMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_matrix(in);
    } catch (ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.what(),
                         e.line, e.column);
    }
}

std::string write_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    out << m.n() << '\n';
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
            if (j > 1) out << ' ';
            out << to_string(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

void write_matrix_file(const std::string& path, const ExactMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << write_matrix(m);
}

std::string matrix_hash(const ExactMatrix& m) {
    const std::string bytes = write_matrix(m);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

std::string render_heatmap(const ExactMatrix& m) {
    static const std::string ramp = " .:-=+*#%@";
    Rat lo = m.at(1, 1), hi = m.at(1, 1);
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) {
            const Rat& v = m.at(i, j);
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    const Rat span = hi - lo;
    std::string out;
    out.reserve(static_cast<std::size_t>(m.n() + 1) * m.n());
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
            std::size_t idx = 0;
            if (span > 0) {
                Rat t = (m.at(i, j) - lo) * static_cast<int>(ramp.size() - 1) / span;
                // round to nearest glyph
                mpz_class num = t.get_num(), den = t.get_den();
                mpz_class q = (2 * num + den) / (2 * den);
                idx = static_cast<std::size_t>(q.get_ui());
                if (idx >= ramp.size()) idx = ramp.size() - 1;
            }
            out += ramp[idx];
        }
        out += '\n';
    }
    return out;
}

}  // namespace qap
