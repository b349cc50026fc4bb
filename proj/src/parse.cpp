#include "arrtop/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

// Comment-stripped, trimmed, nonempty lines with their 1-based numbers.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = raw.find_last_not_of(" \t\r");
        out.push_back({number, raw.substr(begin, end - begin + 1)});
    }
    return out;
}

struct Cursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_spaces() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_spaces();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& where) {
        if (!eat(c))
            fail(line, std::string("expected '") + c + "' " + where);
    }
    long integer(const std::string& what) {
        skip_spaces();
        size_t start = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) fail(line, "expected " + what);
        if (pos - start > 9) fail(line, what + " is out of range");
        return std::stol(s.substr(start, pos - start));
    }
    void done() {
        skip_spaces();
        if (pos != s.size())
            fail(line, "unexpected trailing text '" + s.substr(pos) + "'");
    }
};

index_set parse_set_body(Cursor& c) {
    c.expect('{', "to open an index set");
    index_set out = 0;
    if (c.eat('}')) return out;
    while (true) {
        long i = c.integer("a coordinate index");
        if (i < 1 || i > max_vertices)
            fail(c.line, "coordinate index " + std::to_string(i) +
                             " is out of range (1.." +
                             std::to_string(max_vertices) + ")");
        out = with_vertex(out, static_cast<int>(i));
        if (c.eat(',')) continue;
        c.expect('}', "to close the index set");
        return out;
    }
}

bool looks_like_header(const std::string& text) {
    Cursor c{text, 0};
    return c.eat('n') && c.eat('=');
}

// One generator line; exponents keyed by variable index.
std::map<int, int> parse_generator(const Line& line) {
    Cursor c{line.text, line.number};
    std::map<int, int> exponents;
    char first = c.peek();
    if (first == '{') {
        index_set support = parse_set_body(c);
        c.done();
        for (int v : vertices_of(support)) exponents[v] = 1;
        return exponents;
    }
    if (first == '1') {
        ++c.pos;
        c.done();
        return exponents;  // the constant monomial
    }
    while (true) {
        c.expect('x', "to start a variable");
        long index = c.integer("a variable index after 'x'");
        if (index < 1 || index > max_vertices)
            fail(line.number, "variable index " + std::to_string(index) +
                                  " is out of range (1.." +
                                  std::to_string(max_vertices) + ")");
        long exponent = 1;
        if (c.eat('^')) {
            exponent = c.integer("an exponent after '^'");
            if (exponent < 1)
                fail(line.number, "exponents must be positive");
        }
        exponents[static_cast<int>(index)] += static_cast<int>(exponent);
        if (c.eat('*')) continue;
        c.done();
        return exponents;
    }
}

}  // namespace

MonomialIdeal parse_ideal_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    if (!lines.empty() && looks_like_header(lines[0].text))
        fail(lines[0].number,
             "an n=<int> header starts an arrangement, not an ideal");
    std::vector<std::map<int, int>> exponent_maps;
    int n = 0;
    for (const Line& line : lines) {
        exponent_maps.push_back(parse_generator(line));
        for (auto& [index, exponent] : exponent_maps.back())
            n = std::max(n, index);
    }
    std::vector<Monomial> generators;
    for (const auto& exps : exponent_maps)
        generators.push_back(Monomial::from_exponents(n, exps));
    return minimal_generators(generators);
}

Arrangement parse_arrangement_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw input_error("arrangement input is empty; expected an n=<int> header");
    Cursor header{lines[0].text, lines[0].number};
    if (!header.eat('n') || !header.eat('='))
        fail(lines[0].number, "expected the header n=<int>");
    long n = header.integer("the ambient dimension after n=");
    header.done();
    if (n < 1 || n > max_vertices)
        fail(lines[0].number, "n must be between 1 and " +
                                  std::to_string(max_vertices));

    Arrangement arrangement;
    arrangement.n = static_cast<int>(n);
    for (size_t k = 1; k < lines.size(); ++k) {
        Cursor c{lines[k].text, lines[k].number};
        index_set member = parse_set_body(c);
        c.done();
        for (int v : vertices_of(member))
            if (v > n)
                fail(lines[k].number, "index " + std::to_string(v) +
                                          " exceeds n=" + std::to_string(n));
        arrangement.subspaces.push_back(member);
    }
    return arrangement;
}

ParsedInput parse_input_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    if (!lines.empty() && looks_like_header(lines[0].text))
        return parse_arrangement_text(text);
    return parse_ideal_text(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MonomialIdeal ideal_of(const ParsedInput& input) {
    if (const auto* ideal = std::get_if<MonomialIdeal>(&input)) return *ideal;
    return union_ideal(std::get<Arrangement>(input));
}

Arrangement arrangement_of(const ParsedInput& input) {
    if (const auto* arrangement = std::get_if<Arrangement>(&input))
        return *arrangement;
    return arrangement_of(std::get<MonomialIdeal>(input));
}

}  // namespace arrtop
