#pragma once

#include <iosfwd>
#include <string>

#include "msep/instance.hpp"
#include "msep/oracle.hpp"
#include "msep/volume.hpp"

namespace msep {

// Plain formats with fixed field order so outputs diff cleanly and
// round-trip byte-identically. Costs print with 17 significant digits.
//
//   volume:     "MSEPVOL <gray|bin> <nx> <ny> <nz>\n" + payload
//               (gray: little-endian float64 per voxel; bin: one byte)
//   instance:   "MSEPINST <n_nodes> <n_edges> <n_interactions>\n"
//               + "e u v" + "n v cost" + "i u v cost" lines
//   separator:  "MSEPSEP <n_nodes> <n_members>\n" + one member id per line
//   lmp:        "MSEPLMP <n_nodes> <n_edges> <n_lifted>\n"
//               + "e u v cost" + "l u v cost" lines
//   qubo:       "MSEPQUBO <n> <n_terms>\n" + "q i j value" lines
//   terminals:  "MSEPTERM <n_nodes> <n_edges> <n_terminals>\n"
//               + "e u v" + "t u" + "w v weight" lines (steiner / mtvs)
//   assignment: "MSEPPA <n_nodes> <n_interactions>\n"
//               + "v <id> <0|1|*>" + "f <index> <0|1|*>" lines
//   3-SAT:      DIMACS CNF, three literals per clause

void write_gray_volume(std::ostream& out, const GrayVolume& volume);
GrayVolume read_gray_volume(std::istream& in);
void write_binary_volume(std::ostream& out, const BinaryVolume& volume);
BinaryVolume read_binary_volume(std::istream& in);

void write_instance(std::ostream& out, const MspInstance& instance);
MspInstance read_instance(std::istream& in);

void write_separator(std::ostream& out, const Separator& separator);
Separator read_separator(std::istream& in);

void write_lmp(std::ostream& out, const LmpInstance& instance);
LmpInstance read_lmp(std::istream& in);

void write_qubo(std::ostream& out, const std::vector<QuboTerm>& terms, int n);
std::pair<std::vector<QuboTerm>, int> read_qubo(std::istream& in);

struct TerminalProblem {
    Graph graph;
    std::vector<NodeId> terminals;
    std::vector<double> weights;
};
void write_terminal_problem(std::ostream& out, const TerminalProblem& problem);
TerminalProblem read_terminal_problem(std::istream& in);

void write_assignment(std::ostream& out, const PartialAssignment& assignment);
PartialAssignment read_assignment(std::istream& in, const MspInstance& instance);

std::vector<std::array<int, 3>> read_dimacs_cnf3(std::istream& in);

// file-path convenience wrappers
GrayVolume load_gray_volume(const std::string& path);
BinaryVolume load_binary_volume(const std::string& path);
MspInstance load_instance(const std::string& path);
Separator load_separator(const std::string& path);
LmpInstance load_lmp(const std::string& path);

void save_gray_volume(const std::string& path, const GrayVolume& volume);
void save_binary_volume(const std::string& path, const BinaryVolume& volume);
void save_instance(const std::string& path, const MspInstance& instance);
void save_separator(const std::string& path, const Separator& separator);
void save_lmp(const std::string& path, const LmpInstance& instance);

}  // namespace msep
