#pragma once

#include <collapsible/collapse.hpp>
#include <collapsible/complex.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collapsible {

/// Malformed text input; carries a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Facet lines: base-10 ids separated by single spaces, '#' lines ignored.
SimplicialComplex parse_facet_list(std::string_view text);
std::vector<Face> parse_face_lines(std::string_view text);
/// Facets in lexicographic order, one per line, LF-terminated.
std::string serialize_facet_list(const SimplicialComplex& k);
std::string serialize_face_lines(const std::vector<Face>& faces);

/// FNV-1a 64 over the canonical serialization, as 16 lowercase hex digits.
std::string content_hash(const SimplicialComplex& k);

struct CertificateFile {
    std::string start_hash;
    CollapseCertificate certificate;
};

/// "# collapse certificate", "# start <hash>", then "free | coface" lines.
std::string serialize_certificate(const SimplicialComplex& start, const CollapseCertificate& cert);
CertificateFile parse_certificate(std::string_view text);

struct FaceSequenceFile {
    std::string kind;
    std::string complex_hash;
    std::vector<Face> faces;
};

/// Header "# <kind>" and "# complex <hash>", then one face per line.
/// Used for shelling orders ("shelling order") and dual trees ("dual spanning tree").
std::string serialize_face_sequence(const std::string& kind, const SimplicialComplex& k,
                                    const std::vector<Face>& faces);
FaceSequenceFile parse_face_sequence(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace collapsible
