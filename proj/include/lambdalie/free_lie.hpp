#pragma once
// Degree-truncated free Lie (super)algebras in a Hall basis and their
// quotients by finitely many (inhomogeneous) relations.
#include "lambdalie/catalog.hpp"
#include "lambdalie/verifier.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace lambdalie {

// Hall order: higher degree is smaller, ties by creation id.  Letters come
// first (ids 0..m-1).  For odd h the square (h,h) is a basis tree, and
// ((u,k),k) with k odd is left out: it equals [u,[k,k]]/2.
class HallBasis {
public:
    struct Node {
        int left = -1, right = -1;
        int degree = 1;
        int parity = 0;
    };

    HallBasis(std::vector<std::string> letters, std::vector<int> parities, int cutoff);

    int cutoff() const { return cutoff_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t letters() const { return names_.size(); }
    const Node& node(int id) const { return nodes_[std::size_t(id)]; }
    const std::vector<int>& of_degree(int d) const { return by_degree_.at(std::size_t(d)); }
    int letter(const std::string& name) const;
    const std::vector<std::string>& letter_names() const { return names_; }
    bool less(int h, int k) const;
    std::string str(int id) const;

    using Combo = std::vector<std::pair<int, mpq_class>>;  // sorted by id
    // [h,k] in the Hall basis; requires degree(h) + degree(k) <= cutoff
    const Combo& bracket(int h, int k);

private:
    int find(int l, int r) const;
    bool excluded(int h, int k) const;

    std::vector<std::string> names_;
    int cutoff_;
    std::vector<Node> nodes_;
    std::vector<std::vector<int>> by_degree_;
    std::unordered_map<std::uint64_t, int> index_;
    std::unordered_map<std::uint64_t, Combo> memo_;
};

// sparse element, keyed by Hall tree id
using FreeElem = std::map<int, mpq_class>;

FreeElem free_bracket(HallBasis& hb, const FreeElem& a, const FreeElem& b, bool* truncated = nullptr);

struct FreeRelation {
    std::string name;
    std::string text;  // lhs - rhs as a word formula
};

struct PresentationReport {
    int cutoff = 0;
    std::vector<SuperDim> per_degree;  // index = degree, entry 0 unused
    SuperDim total;
    bool stabilized = false;  // the top two degrees vanish
    bool certified = false;   // cutoff at least twice the last nonzero degree
    std::size_t relation_count = 0;
    int max_relation_degree = 0;
    std::size_t hall_size = 0;
    std::size_t ideal_rank = 0;
    double wall_time = 0;

    Json to_json() const;
};

class Presentation {
public:
    Presentation(std::vector<std::string> letters, std::vector<int> parities, std::string ad_base = "");

    void add_relation(const std::string& name, const std::string& text, const ScalarEnv& env = {});
    const std::vector<std::string>& letters() const { return letters_; }
    const std::vector<int>& parities() const { return parities_; }
    const std::vector<FreeRelation>& relations() const { return rels_; }
    ScalarEnv env_of(std::size_t i) const { return envs_[i]; }
    const std::string& ad_base() const { return ad_base_; }

private:
    std::vector<std::string> letters_;
    std::vector<int> parities_;
    std::string ad_base_;
    std::vector<FreeRelation> rels_;
    std::vector<ScalarEnv> envs_;
};

// The truncated quotient: Hall basis to the cutoff, the relation ideal
// closed under bracketing with letters inside the cutoff, and the echelon
// of the ideal.
class Quotient {
public:
    Quotient(const Presentation& p, int cutoff);

    PresentationReport report() const { return report_; }
    // word formula in the letters (derived names allowed)
    FreeElem element(const std::string& text, const ScalarEnv& env = {});
    bool in_ideal(const FreeElem& v) const;
    HallBasis& basis() { return hb_; }

private:
    FreeElem reduce(FreeElem v) const;

    const Presentation& p_;
    HallBasis hb_;
    std::map<int, std::vector<std::pair<int, mpq_class>>> rows_;  // pivot -> row
    PresentationReport report_;
};

PresentationReport presentation_quotient(const Presentation& p, int cutoff);

// relations of the catalog's integer realization of a family at size n
// (t = 1, lambda as the matrix realization fixes it)
Presentation jacobson_presentation(const Catalog& cat, const std::string& family, long n);

// Chevalley generators e_i, f_i, h_i with the Cartan relations and the
// Serre relations ad(e_i)^{1-a_ij} e_j = 0 for even simple roots with a_ii = 2.
Presentation serre_presentation(const std::vector<std::vector<mpq_class>>& cartan, const std::vector<int>& parities);

}  // namespace lambdalie
