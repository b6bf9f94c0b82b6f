#include "stabloc/formats.hpp"

#include <fstream>
#include <sstream>

#include "stabloc/errors.hpp"

namespace stabloc {

namespace {

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Lines with 1-based numbers, blank and '#' lines dropped.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::string line = strip(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        lines.emplace_back(number, line);
    }
    return lines;
}

std::vector<std::size_t> parse_numbers(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::vector<std::size_t> out;
    long long value = 0;
    while (in >> value) {
        if (value < 0) {
            throw ParseError("negative id", line_no);
        }
        out.push_back(static_cast<std::size_t>(value));
    }
    if (!in.eof()) {
        throw ParseError("expected whitespace-separated integers, got '" + line + "'", line_no);
    }
    return out;
}

} // namespace

SignedCheckMatrix parse_check_matrix(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("empty check-matrix file", 1);
    }
    std::size_t n = 0;
    std::size_t m = 0;
    {
        std::istringstream header(lines[0].second);
        if (!(header >> n >> m)) {
            throw ParseError("header must be 'n m'", lines[0].first);
        }
        std::string extra;
        if (header >> extra) {
            throw ParseError("header must be exactly 'n m'", lines[0].first);
        }
    }
    if (n == 0) {
        throw ParseError("qubit count must be positive", lines[0].first);
    }
    if (lines.size() - 1 != m) {
        throw ParseError("expected " + std::to_string(m) + " generator rows, found " +
                             std::to_string(lines.size() - 1),
                         lines[0].first);
    }
    SignedCheckMatrix out;
    out.matrix = BitMatrix(m, 2 * n);
    out.signs.resize(m, 1);
    for (std::size_t r = 0; r < m; ++r) {
        const auto& [line_no, line] = lines[r + 1];
        if (line.size() != 2 * n + 2) {
            throw ParseError("row must be sign, " + std::to_string(n) + " x-bits, '|', " +
                                 std::to_string(n) + " z-bits",
                             line_no);
        }
        if (line[0] == '+') {
            out.signs[r] = 1;
        } else if (line[0] == '-') {
            out.signs[r] = -1;
        } else {
            throw ParseError("row must start with '+' or '-', got '" + std::string(1, line[0]) +
                                 "'",
                             line_no);
        }
        if (line[n + 1] != '|') {
            throw ParseError("expected '|' between the x and z halves", line_no);
        }
        for (std::size_t k = 0; k < n; ++k) {
            const char xb = line[1 + k];
            const char zb = line[n + 2 + k];
            if ((xb != '0' && xb != '1') || (zb != '0' && zb != '1')) {
                throw ParseError("bits must be '0' or '1'", line_no);
            }
            out.matrix.set(r, k, xb == '1');
            out.matrix.set(r, k + n, zb == '1');
        }
    }
    return out;
}

std::string emit_check_matrix(const BitMatrix& a, const std::vector<int>& signs) {
    if (a.cols() % 2 != 0) {
        throw DimensionError("check matrix must have 2n columns");
    }
    if (signs.size() != a.rows()) {
        throw DimensionError("sign count does not match row count");
    }
    const std::size_t n = a.cols() / 2;
    std::ostringstream out;
    out << n << " " << a.rows() << "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out << (signs[r] == 1 ? '+' : '-');
        for (std::size_t k = 0; k < n; ++k) {
            out << (a.get(r, k) ? '1' : '0');
        }
        out << '|';
        for (std::size_t k = 0; k < n; ++k) {
            out << (a.get(r, k + n) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_check_matrix(const StabilizerGroup& g) {
    return emit_check_matrix(g.check_matrix(), g.signs());
}

Cellulation parse_cellulation(const std::string& text) {
    const auto lines = content_lines(text);
    std::size_t i = 0;
    auto expect = [&](const std::string& what) {
        if (i >= lines.size()) {
            throw ParseError("unexpected end of file, expected " + what,
                             lines.empty() ? 1 : lines.back().first);
        }
        return lines[i++];
    };

    const auto [v_line_no, v_line] = expect("VERTICES header");
    std::size_t num_vertices = 0;
    {
        std::istringstream in(v_line);
        std::string keyword;
        if (!(in >> keyword >> num_vertices) || keyword != "VERTICES") {
            throw ParseError("expected 'VERTICES <count>'", v_line_no);
        }
    }
    const auto [e_line_no, e_line] = expect("EDGES header");
    if (e_line != "EDGES") {
        throw ParseError("expected 'EDGES'", e_line_no);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (i < lines.size() && lines[i].second != "FACES") {
        const auto [line_no, line] = lines[i++];
        const auto nums = parse_numbers(line, line_no);
        if (nums.size() != 3) {
            throw ParseError("edge line must be 'id u v'", line_no);
        }
        if (nums[0] != edges.size()) {
            throw ParseError("edge ids must be sequential from 0; expected " +
                                 std::to_string(edges.size()),
                             line_no);
        }
        edges.emplace_back(nums[1], nums[2]);
    }
    const auto [f_line_no, f_line] = expect("FACES header");
    if (f_line != "FACES") {
        throw ParseError("expected 'FACES'", f_line_no);
    }
    std::vector<std::vector<std::size_t>> faces;
    while (i < lines.size()) {
        const auto [line_no, line] = lines[i++];
        const auto nums = parse_numbers(line, line_no);
        if (nums.size() < 2) {
            throw ParseError("face line must be 'id e1 e2 ...'", line_no);
        }
        if (nums[0] != faces.size()) {
            throw ParseError("face ids must be sequential from 0; expected " +
                                 std::to_string(faces.size()),
                             line_no);
        }
        faces.emplace_back(nums.begin() + 1, nums.end());
    }
    return Cellulation(num_vertices, std::move(edges), std::move(faces));
}

std::string emit_cellulation(const Cellulation& c) {
    std::ostringstream out;
    out << "VERTICES " << c.num_vertices() << "\n";
    out << "EDGES\n";
    for (std::size_t e = 0; e < c.edges().size(); ++e) {
        out << e << " " << c.edges()[e].first << " " << c.edges()[e].second << "\n";
    }
    out << "FACES\n";
    for (std::size_t f = 0; f < c.faces().size(); ++f) {
        out << f;
        for (std::size_t e : c.faces()[f]) {
            out << " " << e;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write file: " + path);
    }
    out << content;
}

} // namespace stabloc
