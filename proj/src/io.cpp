#include "qent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "qent/errors.hpp"

namespace qent {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& msg) {
    throw_parse(source + ":" + std::to_string(line) + ": " + msg);
}

// hands out non-empty lines with their 1-based numbers; blank lines skip
class LineReader {
public:
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            lines_.push_back({no, line});
        }
    }

    bool done() const { return next_ >= lines_.size(); }
    std::size_t line_number() const {
        return done() ? (lines_.empty() ? 1 : lines_.back().first + 1)
                      : lines_[next_].first;
    }
    std::pair<std::size_t, std::string> take() { return lines_[next_++]; }

private:
    std::vector<std::pair<std::size_t, std::string>> lines_;
    std::size_t next_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> expect_line(LineReader& r, const std::string& source,
                                     const std::string& what) {
    if (r.done()) fail(source, r.line_number(), "unexpected end of file; expected " + what);
    return tokens_of(r.take().second);
}

double parse_double(const std::string& tok, const std::string& source, std::size_t line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        fail(source, line, "not a number: '" + tok + "'");
    }
    if (used != tok.size()) fail(source, line, "trailing junk in number: '" + tok + "'");
    return v;
}

std::size_t parse_size(const std::string& tok, const std::string& source, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        fail(source, line, "not an integer: '" + tok + "'");
    }
    if (used != tok.size() || v <= 0) fail(source, line, "expected a positive integer, got '" + tok + "'");
    return static_cast<std::size_t>(v);
}

// payload of `count` complex entries, one "re im" pair per non-blank line
std::vector<cplx> read_pairs(LineReader& r, const std::string& source, std::size_t count) {
    std::vector<cplx> out;
    out.reserve(count);
    while (out.size() < count) {
        if (r.done())
            fail(source, r.line_number(),
                 "unexpected end of file; expected " + std::to_string(count) +
                     " entries, got " + std::to_string(out.size()));
        auto [no, line] = r.take();
        auto toks = tokens_of(line);
        if (toks.size() != 2)
            fail(source, no, "expected an 're im' pair, got " + std::to_string(toks.size()) + " tokens");
        out.emplace_back(parse_double(toks[0], source, no), parse_double(toks[1], source, no));
    }
    return out;
}

void expect_eof(LineReader& r, const std::string& source) {
    if (!r.done()) fail(source, r.line_number(), "trailing content after payload");
}

void check_magic(const std::vector<std::string>& toks, const char* magic,
                 const std::string& source) {
    if (toks.size() != 2 || toks[0] != magic || toks[1] != "1")
        fail(source, 1, std::string("bad magic; expected '") + magic + " 1'");
}

std::string format_pairs(const std::vector<cplx>& v) {
    std::string out;
    char buf[64];
    for (const cplx& z : v) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
        out += buf;
    }
    return out;
}

}  // namespace

State parse_state_text(const std::string& text, const std::string& source) {
    LineReader r(text);
    check_magic(expect_line(r, source, "'QSTATE 1'"), "QSTATE", source);

    std::size_t kindLine = r.line_number();
    auto kind = expect_line(r, source, "'kind pure|density'");
    if (kind.size() != 2 || kind[0] != "kind" || (kind[1] != "pure" && kind[1] != "density"))
        fail(source, kindLine, "expected 'kind pure' or 'kind density'");
    bool pure = kind[1] == "pure";

    std::size_t dimsLine = r.line_number();
    auto dtoks = expect_line(r, source, "'dims d0 d1 ...'");
    if (dtoks.size() < 2 || dtoks[0] != "dims")
        fail(source, dimsLine, "expected 'dims d0 d1 ...'");
    Dims dims;
    for (std::size_t i = 1; i < dtoks.size(); ++i)
        dims.push_back(parse_size(dtoks[i], source, dimsLine));
    std::size_t dim = 1;
    for (std::size_t d : dims) {
        if (d > 4096 || dim > 4096 / d)
            fail(source, dimsLine, "total dimension exceeds the 4096 cap");
        dim *= d;
    }

    std::size_t payloadLine = r.line_number();
    std::vector<cplx> entries = read_pairs(r, source, pure ? dim : dim * dim);
    expect_eof(r, source);

    try {
        State s;
        if (pure) {
            s = State::make_pure(dims, std::move(entries));
        } else {
            CMat rho(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) rho(i, j) = entries[i * dim + j];
            s = State::make_density(dims, std::move(rho));
        }
        s.validate();
        return s;
    } catch (const QentError& e) {
        fail(source, payloadLine, e.what());
    }
}

State parse_state(const std::string& path) {
    return parse_state_text(read_file(path), path);
}

std::string format_state(const State& s) {
    std::string out = "QSTATE 1\n";
    out += s.is_pure() ? "kind pure\n" : "kind density\n";
    out += "dims";
    for (std::size_t d : s.dims) out += " " + std::to_string(d);
    out += "\n";
    if (s.is_pure()) {
        out += format_pairs(s.psi);
    } else {
        std::vector<cplx> flat;
        flat.reserve(s.rho.rows() * s.rho.cols());
        for (std::size_t i = 0; i < s.rho.rows(); ++i)
            for (std::size_t j = 0; j < s.rho.cols(); ++j) flat.push_back(s.rho(i, j));
        out += format_pairs(flat);
    }
    return out;
}

void write_state(const State& s, const std::string& path) {
    write_file(path, format_state(s));
}

KrausChannel parse_kraus_text(const std::string& text, const std::string& source) {
    LineReader r(text);
    check_magic(expect_line(r, source, "'QKRAUS 1'"), "QKRAUS", source);

    auto field = [&](const char* name) {
        std::size_t no = r.line_number();
        auto toks = expect_line(r, source, std::string("'") + name + " <n>'");
        if (toks.size() != 2 || toks[0] != name)
            fail(source, no, std::string("expected '") + name + " <n>'");
        return parse_size(toks[1], source, no);
    };
    std::size_t nops = field("ops");
    std::size_t rows = field("rows");
    std::size_t cols = field("cols");
    if (rows > 4096 || cols > 4096)
        fail(source, r.line_number(), "operator dimension exceeds the 4096 cap");

    std::size_t payloadLine = r.line_number();
    std::vector<cplx> entries = read_pairs(r, source, nops * rows * cols);
    expect_eof(r, source);

    KrausChannel ch;
    for (std::size_t k = 0; k < nops; ++k) {
        CMat v(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                v(i, j) = entries[(k * rows + i) * cols + j];
        ch.ops.push_back(std::move(v));
    }
    try {
        ch.validate();
    } catch (const QentError& e) {
        fail(source, payloadLine, e.what());
    }
    return ch;
}

KrausChannel parse_kraus(const std::string& path) {
    return parse_kraus_text(read_file(path), path);
}

std::string format_kraus(const KrausChannel& ch) {
    require(!ch.ops.empty(), "cannot format an empty channel");
    std::string out = "QKRAUS 1\n";
    out += "ops " + std::to_string(ch.ops.size()) + "\n";
    out += "rows " + std::to_string(ch.dim_out()) + "\n";
    out += "cols " + std::to_string(ch.dim_in()) + "\n";
    for (const CMat& v : ch.ops) {
        std::vector<cplx> flat;
        flat.reserve(v.rows() * v.cols());
        for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j) flat.push_back(v(i, j));
        out += format_pairs(flat);
    }
    return out;
}

void write_kraus(const KrausChannel& ch, const std::string& path) {
    write_file(path, format_kraus(ch));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_parse("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_parse("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw_parse("write failed for '" + path + "'");
}

}  // namespace qent
