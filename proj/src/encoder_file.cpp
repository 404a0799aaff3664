#include "tvcc/encoder_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tvcc/error.hpp"

namespace tvcc {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            line.tokens.push_back({raw.substr(i, j - i), i + 1});
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::size_t parse_count(const Line& line, const Token& tok, const char* what) {
    std::size_t value = 0;
    if (tok.text.empty() || tok.text.size() > 6) throw ParseError(line.number, tok.column, std::string("bad ") + what);
    for (char ch : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(line.number, tok.column, std::string("expected a nonnegative integer for ") + what +
                                                          ", got \"" + std::string(tok.text) + "\"");
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (value == 0) throw ParseError(line.number, tok.column, std::string(what) + " must be positive");
    return value;
}

Poly parse_poly(const Line& line, const Token& tok) {
    for (std::size_t i = 0; i < tok.text.size(); ++i)
        if (tok.text[i] != '0' && tok.text[i] != '1')
            throw ParseError(line.number, tok.column + i,
                             "invalid character '" + std::string(1, tok.text[i]) + "' in polynomial");
    return Poly::parse(tok.text);
}

void append_matrix(std::ostringstream& os, const PolyMatrix& g) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c != 0) os << ' ';
            os << g(r, c).to_string();
        }
        os << '\n';
    }
}

}  // namespace

AnyEncoder parse_encoder(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty encoder file");

    const Line& header = lines.front();
    if (header.tokens.size() != 3)
        throw ParseError(header.number, header.tokens.front().column, "header must be \"p k n\"");
    const std::size_t p = parse_count(header, header.tokens[0], "p");
    const std::size_t k = parse_count(header, header.tokens[1], "k");
    const std::size_t n = parse_count(header, header.tokens[2], "n");
    if (k >= n)
        throw ParseError(header.number, header.tokens[1].column,
                         "encoder needs k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));

    std::size_t cursor = 1;
    std::vector<TimeInvariantEncoder> constituents;
    for (std::size_t i = 0; i < p; ++i) {
        PolyMatrix g(k, n);
        for (std::size_t r = 0; r < k; ++r) {
            if (cursor >= lines.size() || lines[cursor].tokens.front().text == "den") {
                const std::size_t where = cursor < lines.size() ? lines[cursor].number : lines.back().number + 1;
                throw ParseError(where, 1,
                                 "expected row " + std::to_string(r + 1) + " of constituent " + std::to_string(i + 1));
            }
            const Line& line = lines[cursor++];
            if (line.tokens.size() != n)
                throw ParseError(line.number, line.tokens.front().column,
                                 "expected " + std::to_string(n) + " polynomials, got " +
                                     std::to_string(line.tokens.size()));
            for (std::size_t c = 0; c < n; ++c) g(r, c) = parse_poly(line, line.tokens[c]);
        }
        constituents.emplace_back(std::move(g));
    }
    PeriodicEncoder base(std::move(constituents));

    if (cursor == lines.size()) return base;

    const Line& line = lines[cursor++];
    if (line.tokens.front().text != "den")
        throw ParseError(line.number, line.tokens.front().column,
                         "unexpected content after " + std::to_string(p) + " constituents");
    if (line.tokens.size() != 2) throw ParseError(line.number, line.tokens.front().column, "expected \"den <poly>\"");
    Poly den = parse_poly(line, line.tokens[1]);
    if (!den.constant_term())
        throw ParseError(line.number, line.tokens[1].column, "denominator must have constant term 1");
    if (cursor != lines.size())
        throw ParseError(lines[cursor].number, lines[cursor].tokens.front().column, "unexpected content after den");
    return RationalPeriodicEncoder(std::move(base), std::move(den));
}

AnyEncoder read_encoder_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_encoder(ss.str());
}

std::string print_encoder(const PeriodicEncoder& e) {
    std::ostringstream os;
    os << e.period() << ' ' << e.inputs() << ' ' << e.outputs() << '\n';
    for (const auto& c : e.constituents()) append_matrix(os, c.transfer());
    return os.str();
}

std::string print_encoder(const RationalPeriodicEncoder& e) {
    return print_encoder(e.base()) + "den " + e.den().to_string() + '\n';
}

std::string print_encoder(const AnyEncoder& e) {
    return std::visit([](const auto& enc) { return print_encoder(enc); }, e);
}

RationalPeriodicEncoder as_rational(const AnyEncoder& e) {
    if (const auto* r = std::get_if<RationalPeriodicEncoder>(&e)) return *r;
    return RationalPeriodicEncoder(std::get<PeriodicEncoder>(e), Poly::one());
}

}  // namespace tvcc
