#include "transvec/formdoc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace transvec {

namespace {

std::string at_line(uint32_t line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

uint32_t FormDocument::label_index(const std::string& name) const {
    for (uint32_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return i;
    throw ParseError("unknown label '" + name + "'");
}

FormDocument parse_document(const std::string& text) {
    FormDocument doc;
    bool sawDim = false;
    // Descriptor of the declaration already seen for an unordered pair, used
    // to reject a second, conflicting edge/arc on the same two labels.
    std::map<std::pair<std::string, std::string>, std::string> declared;
    struct PendingVector {
        uint32_t line;
        std::string name, text;
    };
    std::vector<PendingVector> pendingVectors;  // resolved once labels are known

    std::istringstream in(text);
    std::string raw;
    uint32_t lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw.substr(0, raw.find('#'));
        std::vector<std::string> words = split_words(line);
        if (words.empty()) continue;
        const std::string& kw = words[0];

        if (kw == "dim") {
            if (sawDim) throw ParseError(at_line(lineNo, "duplicate dim"));
            if (words.size() != 2) throw ParseError(at_line(lineNo, "expected: dim N"));
            try {
                doc.dim = static_cast<uint32_t>(std::stoul(words[1]));
            } catch (const std::exception&) {
                throw ParseError(at_line(lineNo, "dim is not a number"));
            }
            if (doc.dim == 0 || doc.dim > kMaxDim)
                throw ParseError(at_line(lineNo, "dim must be between 1 and 32"));
            sawDim = true;
        } else if (kw == "labels") {
            if (!doc.labels.empty()) throw ParseError(at_line(lineNo, "duplicate labels"));
            doc.labels.assign(words.begin() + 1, words.end());
            std::set<std::string> uniq(doc.labels.begin(), doc.labels.end());
            if (uniq.size() != doc.labels.size())
                throw ParseError(at_line(lineNo, "labels must be unique"));
            if (doc.labels.empty()) throw ParseError(at_line(lineNo, "labels list is empty"));
        } else if (kw == "gens") {
            if (!doc.gens.empty()) throw ParseError(at_line(lineNo, "duplicate gens"));
            doc.gens.assign(words.begin() + 1, words.end());
            if (doc.gens.empty()) throw ParseError(at_line(lineNo, "gens list is empty"));
        } else if (kw == "edge" || kw == "arc") {
            if (words.size() != 3)
                throw ParseError(at_line(lineNo, "expected: " + kw + " A B"));
            if (words[1] == words[2])
                throw ParseError(at_line(lineNo, "self-pairing '" + words[1] + "' not allowed"));
            std::pair<std::string, std::string> key = std::minmax(words[1], words[2]);
            std::string desc = kw == "edge" ? "edge" : "arc " + words[1] + ">" + words[2];
            auto [it, fresh] = declared.emplace(key, desc);
            if (!fresh && it->second != desc)
                throw ParseError(at_line(lineNo, "pair " + words[1] + "," + words[2] +
                                                     " already declared as " + it->second));
            if (fresh) doc.entries.push_back({kw == "edge", words[1], words[2]});
        } else if (kw == "blocks") {
            if (!doc.blocks.empty()) throw ParseError(at_line(lineNo, "duplicate blocks"));
            std::string rest = line.substr(line.find("blocks") + 6);
            size_t pos = 0;
            while (pos < rest.size()) {
                if (std::isspace(static_cast<unsigned char>(rest[pos]))) {
                    ++pos;
                    continue;
                }
                if (rest[pos] != '(')
                    throw ParseError(at_line(lineNo, "expected '(' in blocks declaration"));
                size_t close = rest.find(')', pos);
                if (close == std::string::npos)
                    throw ParseError(at_line(lineNo, "unclosed '(' in blocks declaration"));
                std::vector<std::string> group = split_words(rest.substr(pos + 1, close - pos - 1));
                if (group.empty()) throw ParseError(at_line(lineNo, "empty block group"));
                doc.blocks.push_back(std::move(group));
                pos = close + 1;
            }
            if (doc.blocks.empty())
                throw ParseError(at_line(lineNo, "blocks declaration names no groups"));
        } else if (kw == "vector") {
            if (words.size() != 3)
                throw ParseError(at_line(lineNo, "expected: vector NAME L1+L2+..."));
            for (const PendingVector& p : pendingVectors)
                if (p.name == words[1])
                    throw ParseError(at_line(lineNo, "duplicate vector name '" + words[1] + "'"));
            pendingVectors.push_back({lineNo, words[1], words[2]});
        } else {
            throw ParseError(at_line(lineNo, "unknown keyword '" + kw + "'"));
        }
    }

    if (!sawDim) throw ParseError("missing dim line");
    if (doc.labels.empty()) throw ParseError("missing labels line");
    if (doc.labels.size() != doc.dim)
        throw ParseError("dim is " + std::to_string(doc.dim) + " but there are " +
                         std::to_string(doc.labels.size()) + " labels");
    if (doc.gens.empty()) throw ParseError("missing gens line");

    std::set<std::string> labelSet(doc.labels.begin(), doc.labels.end());
    std::set<std::string> genSet;
    for (const std::string& g : doc.gens) {
        if (!labelSet.count(g)) throw ParseError("gens name unknown label '" + g + "'");
        if (!genSet.insert(g).second) throw ParseError("gens repeat label '" + g + "'");
    }
    for (const DocEntry& e : doc.entries) {
        doc.label_index(e.a);
        doc.label_index(e.b);
    }
    std::set<std::string> blockSeen;
    for (const auto& group : doc.blocks)
        for (const std::string& g : group) {
            if (!genSet.count(g)) throw ParseError("blocks name non-generator '" + g + "'");
            if (!blockSeen.insert(g).second)
                throw ParseError("blocks repeat generator '" + g + "'");
        }
    for (const PendingVector& p : pendingVectors) {
        try {
            // Only vectors declared earlier are visible, so names cannot refer
            // to themselves or forward.
            doc.vectors.push_back({p.name, parse_vector(doc, p.text)});
        } catch (const ParseError& e) {
            throw ParseError(at_line(p.line, e.what()));
        }
    }

    // The generating set itself must be sound (independence, isotropy).
    document_gens(doc);
    return doc;
}

std::string render_document(const FormDocument& doc) {
    std::ostringstream out;
    out << "dim " << doc.dim << "\n";
    out << "labels";
    for (const std::string& l : doc.labels) out << " " << l;
    out << "\ngens";
    for (const std::string& g : doc.gens) out << " " << g;
    out << "\n";
    for (const DocEntry& e : doc.entries)
        out << (e.symmetric ? "edge " : "arc ") << e.a << " " << e.b << "\n";
    if (!doc.blocks.empty()) {
        out << "blocks";
        for (const auto& group : doc.blocks) {
            out << " (";
            for (uint32_t i = 0; i < group.size(); ++i) out << (i ? " " : "") << group[i];
            out << ")";
        }
        out << "\n";
    }
    for (const auto& [name, vec] : doc.vectors)
        out << "vector " << name << " " << vec_to_string(vec, doc.labels) << "\n";
    return out.str();
}

BilinearForm document_form(const FormDocument& doc) {
    BilinearForm f(doc.dim);
    for (const DocEntry& e : doc.entries) {
        uint32_t i = doc.label_index(e.a), j = doc.label_index(e.b);
        if (e.symmetric)
            f.set_symmetric(i, j, 1);
        else
            f.set_entry(i, j, 1);
    }
    return f;
}

GeneratingSet document_gens(const FormDocument& doc) {
    std::vector<F2Vec> vecs;
    for (const std::string& g : doc.gens)
        vecs.push_back(F2Vec::unit(doc.dim, doc.label_index(g)));
    try {
        return GeneratingSet(document_form(doc), vecs, doc.labels);
    } catch (const Error& e) {
        throw ParseError(std::string("document generators are invalid: ") + e.what());
    }
}

std::vector<std::vector<uint32_t>> document_blocks(const FormDocument& doc) {
    std::vector<std::vector<uint32_t>> out;
    for (const auto& group : doc.blocks) {
        std::vector<uint32_t> idx;
        for (const std::string& g : group) {
            auto it = std::find(doc.gens.begin(), doc.gens.end(), g);
            if (it == doc.gens.end()) throw ParseError("blocks name non-generator '" + g + "'");
            idx.push_back(static_cast<uint32_t>(it - doc.gens.begin()));
        }
        out.push_back(std::move(idx));
    }
    return out;
}

F2Vec parse_vector(const FormDocument& doc, const std::string& text) {
    if (text.empty()) throw ParseError("empty vector");
    for (const auto& [name, vec] : doc.vectors)
        if (name == text) return vec;

    bool bitish = text.size() == doc.dim &&
                  std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; });
    // getline drops a trailing empty field, so dangling '+' needs its own test
    bool labelish = text.front() != '+' && text.back() != '+' &&
                    text.find("++") == std::string::npos;
    if (labelish) {
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, '+'))
            if (std::find(doc.labels.begin(), doc.labels.end(), part) == doc.labels.end()) {
                labelish = false;
                break;
            }
    }
    if (labelish) {
        F2Vec v = F2Vec::zero(doc.dim);
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, '+')) {
            uint32_t i = doc.label_index(part);
            if (v.get(i)) throw ParseError("label '" + part + "' repeats in vector");
            v.set(i, 1);
        }
        return v;
    }
    if (bitish) {
        F2Vec v = F2Vec::zero(doc.dim);
        for (uint32_t i = 0; i < doc.dim; ++i)
            if (text[i] == '1') v.set(i, 1);
        return v;
    }
    throw ParseError("cannot read vector '" + text +
                     "' as a name, a label sum, or a bitstring of length " +
                     std::to_string(doc.dim));
}

}  // namespace transvec
