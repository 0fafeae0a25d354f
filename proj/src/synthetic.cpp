#include "actsynth/synthetic.hpp"

#include <cmath>

#include "actsynth/refexpr.hpp"

namespace actsynth {

const std::vector<std::string>& text_corpus(ContentKind kind) {
    static const std::vector<std::string> kNatural = {
        "The harbor opens before dawn and the first boats slip out while the water is still "
        "flat. Gulls follow the wake for scraps, wheeling and dropping in turn. By the time the "
        "sun clears the breakwater the quay is loud with crates and rope.",
        "A good map does not show every street. It shows the streets that matter for the journey "
        "at hand and lets the rest fall away quietly. Which details survive is the cartographer's "
        "real argument about the city.",
        "Glass cools slowly in the annealing oven. Rushed glass remembers the hurry and cracks "
        "along invisible seams weeks later. Patience here is not a virtue but a material "
        "property.",
        "The archive smelled of dust and cold iron. Every ledger had been copied twice, once in "
        "ink and once in a cramped pencil hand that nobody could attribute. We read both "
        "versions aloud and noted every place they disagreed.",
        "Rain reached the valley in the late afternoon. First as a gray curtain over the ridge, "
        "then as a steady drumming on the tin roofs that lasted through supper and into the "
        "night.",
    };
    static const std::vector<std::string> kCode = {
        "def walk(tree, visit):\n"
        "    stack = [tree]\n"
        "    while stack:\n"
        "        node = stack.pop()\n"
        "        visit(node)\n"
        "        stack.extend(node.children)\n",
        "fn median(xs: &mut Vec<i64>) -> i64 {\n"
        "    xs.sort();\n"
        "    let mid = xs.len() / 2;\n"
        "    xs[mid]\n"
        "}\n",
        "for host in $(cat hosts.txt); do\n"
        "  ssh \"$host\" uptime || echo \"$host unreachable\"\n"
        "done\n",
        "class RingBuffer {\n"
        "  constructor(capacity) {\n"
        "    this.items = new Array(capacity);\n"
        "    this.head = 0;\n"
        "    this.size = 0;\n"
        "  }\n"
        "  push(item) {\n"
        "    this.items[this.head] = item;\n"
        "    this.head = (this.head + 1) % this.items.length;\n"
        "  }\n"
        "}\n",
        "SELECT name, count(*) AS versions\n"
        "FROM packages\n"
        "GROUP BY name\n"
        "HAVING count(*) > 3\n"
        "ORDER BY versions DESC;\n",
    };
    return kind == ContentKind::Code ? kCode : kNatural;
}

std::string sample_text_content(ContentKind kind, Rng& rng) {
    return rng.pick(text_corpus(kind));
}

TextBackground make_text_background(int w, int h, Rng& rng) {
    TextBackground bg;
    double hue = rng.uniform(0.0, 360.0);
    Rgb paper = hsv_to_rgb(hue, rng.uniform(0.0, 0.06), 0.93 + rng.uniform(0.0, 0.07));
    Rgb bar = hsv_to_rgb(hue, 0.25 + rng.uniform(0.0, 0.2), 0.45 + rng.uniform(0.0, 0.25));
    bg.image = Image(w, h, paper);
    int bar_h = 28 + int(rng.uniform_int(0, 16));
    fill_polygon(bg.image,
                 std::vector<Point>{{0, 0}, {double(w), 0}, {double(w), double(bar_h)},
                                    {0, double(bar_h)}},
                 bar);
    int margin = 24 + int(rng.uniform_int(0, 24));
    bg.blank_region = {double(margin), double(bar_h + margin), double(w - margin),
                       double(h - margin)};
    return bg;
}

Mask make_blob_mask(int w, int h, Rng& rng) {
    Mask m;
    m.width = w;
    m.height = h;
    m.data.assign(size_t(w) * h, 0);
    double cx = w * rng.uniform(0.3, 0.7);
    double cy = h * rng.uniform(0.3, 0.7);
    double base = std::min(w, h) * rng.uniform(0.15, 0.32);
    double a1 = rng.uniform(0.0, 2 * 3.14159265358979323846);
    double a2 = rng.uniform(0.0, 2 * 3.14159265358979323846);
    double w1 = rng.uniform(0.0, 0.25), w2 = rng.uniform(0.0, 0.15);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double dx = x - cx, dy = y - cy;
            double theta = std::atan2(dy, dx);
            double r = base * (1.0 + w1 * std::sin(2 * theta + a1) + w2 * std::sin(3 * theta + a2));
            if (dx * dx + dy * dy <= r * r) m.set(x, y, true);
        }
    return m;
}

SyntheticImageScene make_image_scene(int w, int h, int region_count, Rng& rng) {
    SyntheticImageScene scene;
    Rgb backdrop = hsv_to_rgb(rng.uniform(0.0, 360.0), 0.12, 0.85);
    scene.image = Image(w, h, backdrop);
    static const char* kNouns[] = {"boulder", "pond",   "bush",   "dune",
                                   "cloud",   "meadow", "stump",  "boat",
                                   "statue",  "tent",   "kite",   "mound"};
    for (int i = 0; i < region_count; ++i) {
        Rng sub = rng.fork("region", uint64_t(i));
        int cell = i % 2 == 0 ? 0 : 1;  // alternate halves to limit overlap
        int rw = w / 2, rh = h;
        Mask local = make_blob_mask(rw, rh, sub);
        Mask full;
        full.width = w;
        full.height = h;
        full.data.assign(size_t(w) * h, 0);
        int ox = cell * (w - rw);
        for (int y = 0; y < rh; ++y)
            for (int x = 0; x < rw; ++x)
                if (local.at(x, y)) full.set(x + ox, y, true);
        if (full.count() == 0) continue;
        Rgb color = sample_color_hsv(sub, {{backdrop, 90.0}}).color;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (full.at(x, y)) scene.image.set(x, y, color);
        std::string noun = kNouns[size_t(sub.uniform_int(0, 11))];
        scene.captions.push_back("the " + nearest_color_name(color) + " " + noun + " (region " +
                                 std::to_string(i + 1) + ")");
        scene.masks.push_back(std::move(full));
    }
    return scene;
}

std::vector<GuiElement> make_gui_elements(int count, Rng& rng) {
    static const char* kIcons[] = {"the gear-shaped settings icon", "the magnifier search icon",
                                   "the trash can icon",           "the floppy-disk save icon",
                                   "the bell notification icon",   "the house-shaped home icon",
                                   "the paper-plane send icon",    "the plus-sign add icon"};
    static const char* kTexts[] = {"the 'Sign in' link",      "the 'Download' button label",
                                   "the 'Pricing' menu item", "the 'Contact us' footer link",
                                   "the 'Read more' button",  "the 'Subscribe' button",
                                   "the 'Edit profile' link", "the 'View cart' button"};
    std::vector<GuiElement> out;
    for (int i = 0; i < count; ++i) {
        GuiElement e;
        e.element_id = i;
        bool icon = rng.bernoulli(0.5);
        e.type = icon ? "icon" : "text";
        e.description = icon ? kIcons[size_t(rng.uniform_int(0, 7))]
                             : kTexts[size_t(rng.uniform_int(0, 7))];
        e.click_point = {std::round(rng.uniform(0.02, 0.98) * 1e5) / 1e5,
                         std::round(rng.uniform(0.02, 0.98) * 1e5) / 1e5};
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace actsynth
