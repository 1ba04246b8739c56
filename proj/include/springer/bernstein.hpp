#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springer/extended_quotient.hpp"

namespace springer {

/* Synthetic catalog describing one Levi's worth of cuspidal data: a lattice
 * with a finite group W_M acting by integer matrices (the unramified-twist
 * torus with its Weyl action), a finite W_M-set of cuspidal labels, and
 * per-label finite isotropy given by torsion vectors in (Z/N)^rank.
 */
struct IsotropyData {
    int modulus = 1;
    std::vector<std::vector<int>> generators;
};

struct CatalogLabel {
    std::string name;
    std::string char_tag;  // central-character tag, preserved through assembly
    std::string shift_tag; // normalization shift, opaque metadata
    IsotropyData isotropy;
    std::optional<Cocycle> kappa; // on the stabilizer of this label
};

struct CatalogEntry {
    std::string levi_id;
    int lattice_rank = 0;
    FiniteGroup wm;
    std::vector<std::vector<std::vector<int>>> matrices; // per wm element
    std::vector<std::vector<int>> action;                // wm x labels
    std::vector<CatalogLabel> labels;
    std::vector<int> wt0; // optional normal subgroup marking the W_t-circle model
};

// Throws std::invalid_argument describing the first defect found.
void validate_entry(const CatalogEntry& e);

struct ComponentDescription {
    int torus_rank = 0;
    FiniteGroup acting_group; // isotropy x| stabilizer
    long long isotropy_order = 0;
    long long stabilizer_order = 0;
    std::string description;
};

// The connected component attached to a label: the rank of the twist torus
// and the finite group (isotropy x| stabilizer) acting on it.
ComponentDescription component_description(const CatalogEntry& e, int label);

struct StabilizerResult {
    FiniteGroup group;
    std::vector<int> elements;  // ambient W_M indices, sorted
    std::vector<int> wt0_local; // marked normal subgroup in local indices
};

// Stabilizer of a label in W_M, as a standalone group; if the entry marks a
// W_t-circle subgroup its intersection is reported in local indices.
StabilizerResult stabilizer_wqt(const CatalogEntry& e, int label);

struct BlockPoint {
    ExtendedQuotientPoint point;
    std::string label_name; // name of the orbit representative label
    std::string char_tag;
    std::string shift_tag;
};

struct Block {
    std::string key;
    std::vector<BlockPoint> points;
};

// The twisted extended quotient over the W_M-orbit of the label, with the
// given cocycle on its stabilizer transported along orbit lifts.
Block assemble_block(const CatalogEntry& e, int label, const Cocycle& kappa);

// One block per label orbit, using each orbit representative's stored
// cocycle (trivial when absent), keyed "<levi>/<representative label name>"
// and key-sorted.
std::vector<Block> assemble_all(const std::vector<CatalogEntry>& catalog);

// The same points grouped per Levi in one pass: the full label-set quotient
// assembled through two_step_quotient over the orbit partition.
std::vector<BlockPoint> assemble_entry_grouped(const CatalogEntry& e);

// Action of W_M on the full label set of the entry.
GroupAction entry_action(const CatalogEntry& e);

// Strict data on the full label set built from per-orbit cocycles.
TwistedQuotientData entry_data(const CatalogEntry& e);

} // namespace springer
