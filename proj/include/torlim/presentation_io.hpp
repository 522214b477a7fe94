#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torlim/fp_module.hpp"

namespace torlim {

// Line-oriented presentation files. Modules:
//
//   module <name>
//   generators <g>
//   relations
//   [4,0]
//   [0,6]
//
// Map files reference modules defined in the same file:
//
//   map <name>
//   source <module name>
//   target <module name>
//   matrix
//   [2]
//
// Blank lines and lines starting with '#' are ignored. Errors carry the line
// number; a relation or matrix row of the wrong width raises RowLengthMismatch.
struct NamedModule {
    std::string name;
    FpModule module;
};

struct NamedMap {
    std::string name;
    std::string source_name, target_name;
    ModuleMap map;
};

struct PresentationFile {
    std::vector<NamedModule> modules;
    std::vector<NamedMap> maps;

    const NamedModule* find_module(const std::string& name) const;
};

PresentationFile parse_presentation_file(const std::string& text);

// First module of the file (the common single-module case).
FpModule parse_presentation(const std::string& text);

std::string print_presentation(const FpModule& m, const std::string& name);
std::string print_map(const ModuleMap& f, const std::string& name, const std::string& source_name,
                      const std::string& target_name);

// Bracketed row rendering shared by printers and reports.
std::string render_row(const std::vector<Int>& row);
std::vector<std::string> render_matrix_rows(const IntMatrix& m);

}  // namespace torlim
