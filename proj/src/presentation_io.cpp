#include "torlim/presentation_io.hpp"

#include <cctype>
#include <sstream>

#include "torlim/errors.hpp"

namespace torlim {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_int_token(const std::string& token, Int& out) {
    std::string t = trim(token);
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    out = Int(t);
    return true;
}

std::vector<Int> parse_row(const std::string& line, std::size_t lineno) {
    std::string t = trim(line);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(lineno, "expected a bracketed integer row");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<Int> row;
    if (trim(inner).empty()) return row;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Int v;
        if (!parse_int_token(tok, v)) throw ParseError(lineno, "bad integer '" + trim(tok) + "'");
        row.push_back(v);
    }
    return row;
}

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::stringstream ss(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(ss, raw)) {
        ++number;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        lines.push_back({number, t});
    }
    return lines;
}

bool keyword(const Line& l, const std::string& kw, std::string& rest) {
    if (l.text.rfind(kw, 0) != 0) return false;
    if (l.text.size() > kw.size() && !std::isspace(static_cast<unsigned char>(l.text[kw.size()])))
        return false;
    rest = trim(l.text.substr(kw.size()));
    return true;
}

}  // namespace

const NamedModule* PresentationFile::find_module(const std::string& name) const {
    for (const NamedModule& m : modules)
        if (m.name == name) return &m;
    return nullptr;
}

PresentationFile parse_presentation_file(const std::string& text) {
    PresentationFile file;
    std::vector<Line> lines = significant_lines(text);
    std::size_t pos = 0;

    auto read_rows = [&](std::size_t width, bool width_known) {
        std::vector<std::vector<Int>> rows;
        while (pos < lines.size() && trim(lines[pos].text).front() == '[') {
            std::vector<Int> row = parse_row(lines[pos].text, lines[pos].number);
            if (width_known && row.size() != width)
                throw RowLengthMismatch(lines[pos].number,
                                        "row has " + std::to_string(row.size()) + " entries, expected " +
                                            std::to_string(width));
            rows.push_back(std::move(row));
            ++pos;
        }
        return rows;
    };

    while (pos < lines.size()) {
        std::string rest;
        if (keyword(lines[pos], "module", rest)) {
            if (rest.empty()) throw ParseError(lines[pos].number, "module needs a name");
            std::string name = rest;
            ++pos;
            if (pos >= lines.size() || !keyword(lines[pos], "generators", rest))
                throw ParseError(pos < lines.size() ? lines[pos].number : 0,
                                 "expected 'generators <g>' after module header");
            std::size_t g = 0;
            try {
                g = std::stoul(rest);
            } catch (...) {
                throw ParseError(lines[pos].number, "bad generator count '" + rest + "'");
            }
            ++pos;
            std::vector<std::vector<Int>> rows;
            if (pos < lines.size() && keyword(lines[pos], "relations", rest)) {
                ++pos;
                rows = read_rows(g, true);
            }
            IntMatrix rel(rows.size(), g);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < g; ++j) rel.at(i, j) = rows[i][j];
            file.modules.push_back({name, FpModule(g, std::move(rel))});
        } else if (keyword(lines[pos], "map", rest)) {
            if (rest.empty()) throw ParseError(lines[pos].number, "map needs a name");
            std::string name = rest;
            std::size_t header_line = lines[pos].number;
            ++pos;
            std::string source_name, target_name;
            if (pos < lines.size() && keyword(lines[pos], "source", source_name))
                ++pos;
            else
                throw ParseError(header_line, "map needs a 'source <module>' line");
            if (pos < lines.size() && keyword(lines[pos], "target", target_name))
                ++pos;
            else
                throw ParseError(header_line, "map needs a 'target <module>' line");
            if (pos >= lines.size() || !keyword(lines[pos], "matrix", rest))
                throw ParseError(header_line, "map needs a 'matrix' section");
            ++pos;
            const NamedModule* src = file.find_module(source_name);
            const NamedModule* dst = file.find_module(target_name);
            if (!src) throw ParseError(header_line, "unknown source module '" + source_name + "'");
            if (!dst) throw ParseError(header_line, "unknown target module '" + target_name + "'");
            std::vector<std::vector<Int>> rows = read_rows(src->module.generators(), true);
            if (rows.size() != dst->module.generators())
                throw RowLengthMismatch(header_line,
                                        "matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                            std::to_string(dst->module.generators()));
            IntMatrix mat(rows.size(), src->module.generators());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < mat.cols(); ++j) mat.at(i, j) = rows[i][j];
            file.maps.push_back({name, source_name, target_name,
                                 ModuleMap(src->module, dst->module, std::move(mat))});
        } else {
            throw ParseError(lines[pos].number, "expected 'module' or 'map', got '" + lines[pos].text + "'");
        }
    }
    return file;
}

FpModule parse_presentation(const std::string& text) {
    PresentationFile file = parse_presentation_file(text);
    if (file.modules.empty()) throw ParseError(0, "no module in input");
    return file.modules.front().module;
}

std::string render_row(const std::vector<Int>& row) {
    std::string out = "[";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += row[i].get_str();
    }
    return out + "]";
}

std::vector<std::string> render_matrix_rows(const IntMatrix& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(render_row(m.row(i)));
    return rows;
}

std::string print_presentation(const FpModule& m, const std::string& name) {
    std::ostringstream out;
    out << "module " << name << "\n";
    out << "generators " << m.generators() << "\n";
    out << "relations\n";
    for (const std::string& row : render_matrix_rows(m.relations())) out << row << "\n";
    return out.str();
}

std::string print_map(const ModuleMap& f, const std::string& name, const std::string& source_name,
                      const std::string& target_name) {
    std::ostringstream out;
    out << print_presentation(f.source(), source_name) << "\n";
    out << print_presentation(f.target(), target_name) << "\n";
    out << "map " << name << "\n";
    out << "source " << source_name << "\n";
    out << "target " << target_name << "\n";
    out << "matrix\n";
    for (const std::string& row : render_matrix_rows(f.matrix())) out << row << "\n";
    return out.str();
}

}  // namespace torlim
