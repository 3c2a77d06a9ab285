#pragma once

#include <string>

#include "hopf/constructions.hpp"
#include "hopf/rib.hpp"
#include "hopf/yd.hpp"

#include "json.hpp"

namespace hopf {

using njson = nlohmann::ordered_json;

/// A coalgebra file: the Hopf-level data plus whatever optional structure the
/// file carried (R family, ribbon family).
struct TCoalgData {
    TCoalg H;
    RMatrixFamily R;
    bool has_r = false;
    RibbonFamily theta;
    bool has_theta = false;
};

njson tcoalg_to_json(const TCoalgData &d);
TCoalgData tcoalg_from_json(const njson &j);
TCoalgData load_tcoalg(const std::string &path);
void save_tcoalg(const TCoalgData &d, const std::string &path);

njson hmodule_to_json(const HModule &m, std::uint32_t field = 0);
HModule hmodule_from_json(const njson &j);
HModule load_hmodule(const std::string &path);
void save_hmodule(const HModule &m, const std::string &path,
                  std::uint32_t field = 0);

njson yd_to_json(const YDModule &v, std::uint32_t field = 0);
YDModule yd_from_json(const njson &j);
YDModule load_yd(const std::string &path);
void save_yd(const YDModule &v, const std::string &path,
             std::uint32_t field = 0);

njson rib_to_json(const RibObject &o, std::uint32_t field = 0);
RibObject rib_from_json(const njson &j);
RibObject load_rib(const std::string &path);
void save_rib(const RibObject &o, const std::string &path,
              std::uint32_t field = 0);

/// Parse a whole file into json, converting stream/syntax problems into
/// ParseError.
njson read_json_file(const std::string &path);
void write_json_file(const njson &j, const std::string &path);

}  // namespace hopf
