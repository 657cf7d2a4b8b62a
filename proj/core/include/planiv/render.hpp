#pragma once

#include <string>

#include "planiv/representation.hpp"

namespace planiv {

enum class RenderFormat { Ascii, Svg };

/// Draws the representation on one horizontal axis: intervals as labeled
/// bars, stacked into rows by a greedy assignment so bars overlapping in x
/// never share a row. The representation is normalized first; with
/// `highlight_displayed` the displayed portions (recomputed on the
/// normalized copy) are marked.
std::string render(const Representation& rep, RenderFormat format,
                   bool highlight_displayed = false);

RenderFormat render_format_from_name(const std::string& name);

}  // namespace planiv
