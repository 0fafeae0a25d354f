#pragma once

#include <string>
#include <vector>

#include "actsynth/image_annot.hpp"
#include "actsynth/raster.hpp"
#include "actsynth/rng.hpp"
#include "actsynth/taskgen.hpp"
#include "actsynth/textpage.hpp"

namespace actsynth {

// Stand-in inputs for pipeline runs when no user-supplied corpora are given:
// text snippets, plain editor-style backgrounds, blob masks and GUI element
// lists. All deterministic in the rng they receive.

// Bundled snippets; `kind` selects code or natural-language content.
const std::vector<std::string>& text_corpus(ContentKind kind);
std::string sample_text_content(ContentKind kind, Rng& rng);

struct TextBackground {
    Image image;
    Rect blank_region;
};

// A flat document-like background with a title strip; the blank region
// covers the writable body.
TextBackground make_text_background(int w, int h, Rng& rng);

// Organic blob mask centered in a w x h grid. Convexity is not guaranteed.
Mask make_blob_mask(int w, int h, Rng& rng);

// Scene of colored blob regions on a plain backdrop: the rendered image plus
// one mask and caption per region.
struct SyntheticImageScene {
    Image image;
    std::vector<Mask> masks;
    std::vector<std::string> captions;
};
SyntheticImageScene make_image_scene(int w, int h, int region_count, Rng& rng);

// Plausible widget list for GUI task generation (normalized click points).
std::vector<GuiElement> make_gui_elements(int count, Rng& rng);

}  // namespace actsynth
