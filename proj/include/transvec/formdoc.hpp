#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "transvec/graphs.hpp"

namespace transvec {

// Line-oriented description of a bilinear form, its generating set, and any
// extras (chain blocks, named vectors). `#` starts a comment, blank lines are
// skipped, and the accepted lines are:
//
//   dim N
//   labels L1 L2 ...
//   gens L1 ...
//   edge A B            (sets both directions of the pairing to 1)
//   arc A B             (sets only the A -> B direction)
//   blocks (L..)(L..)...
//   vector NAME L1+L2+...
struct DocEntry {
    bool symmetric = true;  // edge when true, arc when false
    std::string a, b;
    bool operator==(const DocEntry&) const = default;
};

struct FormDocument {
    uint32_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::string> gens;
    std::vector<DocEntry> entries;
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::pair<std::string, F2Vec>> vectors;

    bool operator==(const FormDocument&) const = default;

    uint32_t label_index(const std::string& name) const;  // throws ParseError
};

FormDocument parse_document(const std::string& text);
std::string render_document(const FormDocument& doc);

// Ambient form and generating set described by the document.
BilinearForm document_form(const FormDocument& doc);
GeneratingSet document_gens(const FormDocument& doc);

// Generator indices of the declared blocks, ready for validate_blocks.
std::vector<std::vector<uint32_t>> document_blocks(const FormDocument& doc);

// Accepts a vector named in the document, a sum of labels `L1+L2+...`, or a
// bitstring in label order.
F2Vec parse_vector(const FormDocument& doc, const std::string& text);

}  // namespace transvec
