#include "transvec/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace transvec {

namespace {

const char* kFigEx = R"(# worked ten-coordinate example: six generators in a fifteen-edge ambient graph
dim 10
labels b1 b2 b3 b4 b5 b6 v1 v2 v3 v4
gens b1 b2 b3 b4 b5 b6
edge v1 b1
edge b1 b5
edge v3 b3
edge v2 b2
edge b2 b6
edge v4 b4
edge b1 b3
edge b1 v3
edge b2 b4
edge b2 b3
edge b2 v4
edge b2 v3
edge b3 b5
edge b3 b6
edge b4 b6
)";

const char* kFigExx = R"(# worked chained example: the left pair {b3,b6} points into the right diamond
dim 9
labels b1 b2 b3 b4 b5 b6 v1 v2 v3
gens b1 b2 b3 b4 b5 b6
edge v1 b1
edge b1 b4
edge v2 b2
edge b2 b5
edge b1 v2
edge b1 b2
edge b2 b4
edge b4 b5
edge v3 b3
edge b3 b6
arc v3 b2
arc b3 b2
arc b3 b5
arc b6 b5
blocks (b3 b6)(b1 b2 b4 b5)
)";

std::vector<uint32_t> fixture_params(const std::string& name, const std::string& args,
                                     uint32_t expected) {
    std::vector<uint32_t> out;
    std::istringstream in(args);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            out.push_back(static_cast<uint32_t>(std::stoul(part)));
        } catch (const std::exception&) {
            throw ParseError("fixture " + name + ": parameter '" + part + "' is not a number");
        }
    }
    if (out.size() != expected)
        throw ParseError("fixture " + name + " takes " + std::to_string(expected) +
                         " parameter(s)");
    return out;
}

struct DocBuilder {
    std::ostringstream out;
    std::vector<std::string> labels;

    void header(uint32_t dim, const std::string& stem, uint32_t gensCount) {
        for (uint32_t i = 0; i < dim; ++i) labels.push_back(stem + std::to_string(i + 1));
        out << "dim " << dim << "\nlabels";
        for (const std::string& l : labels) out << " " << l;
        out << "\ngens";
        for (uint32_t i = 0; i < gensCount; ++i) out << " " << labels[i];
        out << "\n";
    }
    void edge(uint32_t i, uint32_t j) {
        out << "edge " << labels[i] << " " << labels[j] << "\n";
    }
};

void check_dim(const std::string& name, uint32_t dim) {
    if (dim > kMaxDim)
        throw ParseError("fixture " + name + ": dimension " + std::to_string(dim) +
                         " exceeds the supported " + std::to_string(kMaxDim));
}

std::string broom_doc(uint32_t m, uint32_t k) {
    if (m < 2) throw ParseError("fixture dmk: chain length m must be at least 2");
    check_dim("dmk", m + k);
    DocBuilder d;
    d.labels.reserve(m + k);
    for (uint32_t i = 0; i < m; ++i) d.labels.push_back("a" + std::to_string(i + 1));
    for (uint32_t j = 0; j < k; ++j) d.labels.push_back("c" + std::to_string(j + 1));
    d.out << "dim " << (m + k) << "\nlabels";
    for (const std::string& l : d.labels) d.out << " " << l;
    d.out << "\ngens";
    for (const std::string& l : d.labels) d.out << " " << l;
    d.out << "\n";
    for (uint32_t i = 0; i + 1 < m; ++i) d.edge(i, i + 1);
    for (uint32_t j = 0; j < k; ++j) d.edge(m - 1, m + j);
    return d.out.str();
}

std::string janssen_doc(char family, uint32_t n, uint32_t p) {
    std::string name = std::string("janssen-") + family;
    if (family == 'a' && n < 3) throw ParseError("fixture " + name + ": n must be at least 3");
    if (family == 'b' && n < 4) throw ParseError("fixture " + name + ": n must be at least 4");
    if (family == 'c' && (n < 3 || p < 1))
        throw ParseError("fixture " + name + ": needs n >= 3 and p >= 1");
    check_dim(name, 2 * n + p);
    DocBuilder d;
    d.header(2 * n + p, "b", 2 * n + p);
    if (family == 'a') {
        for (uint32_t i = 1; i + 1 < 2 * n - 1; ++i) d.edge(i, i + 1);
        d.edge(0, 3);
        for (uint32_t j = 1; j <= p + 1; ++j) d.edge(2 * n - 2, 2 * n - 2 + j);
    } else if (family == 'b') {
        for (uint32_t i = 2; i + 1 < 2 * n - 1; ++i) d.edge(i, i + 1);
        d.edge(5, 1);
        d.edge(1, 0);
        for (uint32_t j = 1; j <= p + 1; ++j) d.edge(2 * n - 2, 2 * n - 2 + j);
    } else {
        for (uint32_t i = 1; i + 1 < 2 * n; ++i) d.edge(i, i + 1);
        d.edge(0, 4);
        for (uint32_t j = 1; j <= p; ++j) d.edge(2 * n - 1, 2 * n - 1 + j);
    }
    return d.out.str();
}

std::string cycle_doc(uint32_t r) {
    if (r < 3) throw ParseError("fixture cycle: needs at least 3 vertices");
    check_dim("cycle", r);
    DocBuilder d;
    d.header(r, "b", r);
    for (uint32_t i = 0; i < r; ++i) d.edge(i, (i + 1) % r);
    return d.out.str();
}

std::string e6_doc() {
    DocBuilder d;
    d.header(6, "x", 6);
    d.edge(0, 1);
    d.edge(1, 2);
    d.edge(2, 3);
    d.edge(3, 4);
    d.edge(5, 2);
    return d.out.str();
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"e6",         "dmk:M,K",      "janssen-a:N,P", "janssen-b:N,P",
            "janssen-c:N,P", "cycle:R",   "fig-ex",        "fig-exx"};
}

bool is_fixture_name(const std::string& name) {
    if (name == "e6" || name == "fig-ex" || name == "fig-exx") return true;
    for (const char* stem : {"dmk:", "janssen-a:", "janssen-b:", "janssen-c:", "cycle:"})
        if (name.rfind(stem, 0) == 0) return true;
    return false;
}

std::string fixture_document(const std::string& name) {
    if (name == "e6") return e6_doc();
    if (name == "fig-ex") return kFigEx;
    if (name == "fig-exx") return kFigExx;
    size_t colon = name.find(':');
    std::string stem = name.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (stem == "dmk") {
        auto p = fixture_params(stem, args, 2);
        return broom_doc(p[0], p[1]);
    }
    if (stem == "janssen-a" || stem == "janssen-b" || stem == "janssen-c") {
        auto p = fixture_params(stem, args, 2);
        return janssen_doc(stem.back(), p[0], p[1]);
    }
    if (stem == "cycle") {
        auto p = fixture_params(stem, args, 1);
        return cycle_doc(p[0]);
    }
    throw ParseError("unknown fixture '" + name + "'");
}

std::string load_input(const std::string& input) {
    if (is_fixture_name(input)) return fixture_document(input);
    std::ifstream in(input);
    if (!in) throw ParseError("no fixture or readable file named '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace transvec
