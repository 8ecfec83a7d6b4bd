#include <collapsible/formats.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace collapsible {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

struct Line {
    std::size_t number = 0;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        out.push_back({number++, line});
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

/// Space-separated vertex ids starting at `column` (1-based) for diagnostics.
Face parse_face(std::string_view s, std::size_t line, std::size_t column)
{
    if (s.empty())
        throw ParseError(line, column, "empty face");
    std::uint64_t bits = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ')
            throw ParseError(line, column + i, "expected a vertex id (single spaces only, no padding)");
        std::size_t j = i;
        int value = 0;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
            value = value * 10 + (s[j] - '0');
            if (value >= kMaxVertices)
                throw ParseError(line, column + i, "vertex id out of range [0, 64)");
            ++j;
        }
        if (j == i)
            throw ParseError(line, column + i, std::string("unexpected character '") + s[i] + "'");
        if (j - i > 1 && s[i] == '0')
            throw ParseError(line, column + i, "leading zero in vertex id");
        const std::uint64_t bit = std::uint64_t{1} << value;
        if (bits & bit)
            throw ParseError(line, column + i, "duplicate vertex " + std::to_string(value));
        bits |= bit;
        if (j < s.size()) {
            if (s[j] != ' ')
                throw ParseError(line, column + j, std::string("unexpected character '") + s[j] + "'");
            if (j + 1 == s.size())
                throw ParseError(line, column + j, "trailing whitespace");
            ++j;
        }
        i = j;
    }
    return Face(bits);
}

bool is_comment(std::string_view s) { return !s.empty() && s.front() == '#'; }

std::string header_value(const std::vector<Line>& lines, std::string_view key)
{
    const std::string prefix = "# " + std::string(key) + " ";
    for (const auto& l : lines)
        if (l.text.starts_with(prefix))
            return std::string(l.text.substr(prefix.size()));
    return {};
}

} // namespace

std::vector<Face> parse_face_lines(std::string_view text)
{
    std::vector<Face> faces;
    for (const auto& l : split_lines(text)) {
        if (is_comment(l.text))
            continue;
        if (l.text.empty())
            throw ParseError(l.number, 1, "empty line");
        faces.push_back(parse_face(l.text, l.number, 1));
    }
    return faces;
}

SimplicialComplex parse_facet_list(std::string_view text)
{
    const auto faces = parse_face_lines(text);
    if (faces.empty())
        throw ParseError(1, 1, "empty file: no facets");
    return SimplicialComplex::from_facets(faces);
}

std::string serialize_face_lines(const std::vector<Face>& faces)
{
    std::string out;
    for (Face f : faces) {
        out += f.to_string();
        out += '\n';
    }
    return out;
}

std::string serialize_facet_list(const SimplicialComplex& k) { return serialize_face_lines(k.facets()); }

std::string content_hash(const SimplicialComplex& k)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_facet_list(k)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string serialize_certificate(const SimplicialComplex& start, const CollapseCertificate& cert)
{
    std::string out = "# collapse certificate\n# start " + content_hash(start) + "\n# steps " +
                      std::to_string(cert.steps.size()) + "\n";
    for (const auto& s : cert.steps)
        out += s.free_face.to_string() + " | " + s.coface.to_string() + "\n";
    return out;
}

CertificateFile parse_certificate(std::string_view text)
{
    const auto lines = split_lines(text);
    CertificateFile file;
    file.start_hash = header_value(lines, "start");
    for (const auto& l : lines) {
        if (is_comment(l.text))
            continue;
        const auto bar = l.text.find(" | ");
        if (bar == std::string_view::npos)
            throw ParseError(l.number, 1, "expected 'free face | coface'");
        const Face f = parse_face(l.text.substr(0, bar), l.number, 1);
        const Face big = parse_face(l.text.substr(bar + 3), l.number, bar + 4);
        file.certificate.steps.push_back({f, big});
    }
    return file;
}

std::string serialize_face_sequence(const std::string& kind, const SimplicialComplex& k,
                                    const std::vector<Face>& faces)
{
    return "# " + kind + "\n# complex " + content_hash(k) + "\n" + serialize_face_lines(faces);
}

FaceSequenceFile parse_face_sequence(std::string_view text)
{
    const auto lines = split_lines(text);
    FaceSequenceFile file;
    if (!lines.empty() && is_comment(lines.front().text) && lines.front().text.size() > 2)
        file.kind = std::string(lines.front().text.substr(2));
    file.complex_hash = header_value(lines, "complex");
    file.faces = parse_face_lines(text);
    return file;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
}

} // namespace collapsible
