#include "gr/certificate.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace gr {

CertificateError::CertificateError(const std::string& what, long long offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
      byte_offset(offset) {}

void write_certificate(const ColoredCompleteGraph& g, const Metadata& meta, std::ostream& out) {
    out << "GRC1 " << g.n() << ' ' << g.k() << '\n';
    for (int i = 0; i < g.n() - 1; ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (j > i + 1) out << ' ';
            out << (g.has_edge(i, j) ? g.color(i, j) : 0);
        }
        out << '\n';
    }
    for (const auto& [key, value] : meta) out << "# " << key << ' ' << value << '\n';
}

namespace {

// Tokenizer that tracks the byte offset of each token start.
struct Reader {
    std::istream& in;
    long long pos = 0;

    int get() {
        int c = in.get();
        if (c != EOF) ++pos;
        return c;
    }

    // Skips whitespace; returns offset of token start, or -1 at EOF.
    // Stops at '#' so metadata lines are handled separately.
    long long next_token(std::string& tok) {
        int c;
        do { c = get(); } while (c == ' ' || c == '\t' || c == '\n' || c == '\r');
        if (c == EOF) return -1;
        long long start = pos - 1;
        tok.clear();
        while (c != EOF && c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            tok.push_back(static_cast<char>(c));
            c = get();
        }
        return start;
    }
};

long long parse_int(const std::string& tok, long long offset, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CertificateError(std::string("cannot parse ") + what + " '" + tok + "'", offset);
    }
}

}  // namespace

ColoredCompleteGraph read_certificate(std::istream& in, Metadata* meta) {
    Reader r{in};
    std::string tok;
    long long off = r.next_token(tok);
    if (off < 0 || tok != "GRC1") throw CertificateError("missing GRC1 header", off < 0 ? 0 : off);
    off = r.next_token(tok);
    if (off < 0) throw CertificateError("truncated header: missing n", r.pos);
    long long n = parse_int(tok, off, "vertex count");
    off = r.next_token(tok);
    if (off < 0) throw CertificateError("truncated header: missing k", r.pos);
    long long k = parse_int(tok, off, "color count");
    if (n < 1 || n > 100000) throw CertificateError("vertex count out of range", off);
    if (k < 1 || k > 255) throw CertificateError("color count out of range", off);

    ColoredCompleteGraph g(static_cast<int>(n), static_cast<int>(k), 1);
    long long entries = n * (n - 1) / 2;
    long long idx = 0;
    int i = 0, j = 1;
    while (idx < entries) {
        off = r.next_token(tok);
        if (off < 0)
            throw CertificateError("truncated body: expected " + std::to_string(entries) +
                                       " entries, got " + std::to_string(idx),
                                   r.pos);
        if (tok[0] == '#')
            throw CertificateError("metadata before body complete at entry " + std::to_string(idx), off);
        long long c = parse_int(tok, off, "color entry");
        if (c < 0 || c > k)
            throw CertificateError("entry " + std::to_string(idx) + " has color " + std::to_string(c) +
                                       " outside [0," + std::to_string(k) + "]",
                                   off);
        if (c == 0)
            g.erase_edge(i, j);
        else
            g.set_color(i, j, static_cast<int>(c));
        ++idx;
        if (++j == n) { ++i; j = i + 1; }
    }

    // Remaining lines are "# key value..." metadata.
    std::string line;
    while (std::getline(in, line)) {
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos) continue;
        if (line[p] != '#')
            throw CertificateError("trailing data after body: '" + line + "'", r.pos);
        if (meta) {
            std::istringstream ls(line.substr(p + 1));
            std::string key, value;
            ls >> key;
            std::getline(ls, value);
            size_t q = value.find_first_not_of(' ');
            if (q != std::string::npos) value = value.substr(q); else value.clear();
            meta->emplace_back(key, value);
        }
    }
    return g;
}

void write_certificate_file(const ColoredCompleteGraph& g, const Metadata& meta, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_certificate(g, meta, out);
}

ColoredCompleteGraph read_certificate_file(const std::string& path, Metadata* meta) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_certificate(in, meta);
}

}  // namespace gr
