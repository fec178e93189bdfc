#pragma once

#include <string>

#include "nslab/field.hpp"

namespace nslab {

/// Raw field files: header-free little-endian 64-bit floats in x1-fastest
/// order, one block per component, with a text sidecar `<path>.meta` holding
/// key=value lines n1, n2, n3, components (1 or 3), order=x1-fastest.

void write_scalar_field(const std::string& path, const ScalarField& f);
void write_vector_field(const std::string& path, const VectorField& u);

ScalarField read_scalar_field(const std::string& path);
VectorField read_vector_field(const std::string& path);

/// Sidecar probe: number of components recorded for the field at `path`.
int field_components(const std::string& path);

}  // namespace nslab
