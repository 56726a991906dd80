// SPDX-License-Identifier: Apache-2.0
#include "uavplace/scenario_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "uavplace/errors.hpp"

namespace uavp {
namespace {

using nlohmann::json;

[[noreturn]] void fail_parse(const std::string& message) { throw ParseError(message); }

const json& object_field(const json& j, const char* key, const json& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_object()) fail_parse(std::string(key) + ": expected an object");
  return v;
}

double as_number(const json& v, const std::string& at) {
  if (!v.is_number()) fail_parse(at + ": expected a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& at) {
  if (!v.is_number_integer()) fail_parse(at + ": expected an integer");
  return v.get<int>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& scope) {
  if (!obj.contains(key)) return fallback;
  return as_number(obj.at(key), scope + "." + key);
}

LinkBudget link_budget_from_json(const json& root) {
  static const json empty = json::object();
  const json& radio = object_field(root, "radio", empty);

  LinkBudget lb;
  lb.frequency_mhz = number_or(radio, "frequency_mhz", kDefaultFrequencyMhz, "radio");
  lb.bandwidth_mhz = number_or(radio, "bandwidth_mhz", kDefaultBandwidthMhz, "radio");
  lb.tx_power_dbm = number_or(radio, "tx_power_dbm", kDefaultTxPowerDbm, "radio");
  lb.tx_gain_dbi = number_or(radio, "tx_gain_dbi", kDefaultAntennaGainDbi, "radio");
  lb.rx_gain_dbi = number_or(radio, "rx_gain_dbi", kDefaultAntennaGainDbi, "radio");
  lb.noise_floor_dbm = number_or(radio, "noise_floor_dbm", kDefaultNoiseFloorDbm, "radio");
  lb.nlos_extra_loss_db = number_or(radio, "nlos_loss_db", kDefaultNlosLossDb, "radio");

  lb.frequency_hz = lb.frequency_mhz * 1e6;
  lb.bandwidth_hz = lb.bandwidth_mhz * 1e6;
  lb.tx_power_w = dbm_to_watts(lb.tx_power_dbm);
  lb.tx_gain = db_to_linear(lb.tx_gain_dbi);
  lb.rx_gain = db_to_linear(lb.rx_gain_dbi);
  lb.noise_floor_w = dbm_to_watts(lb.noise_floor_dbm);

  if (root.contains("c_max_mbps")) {
    lb.c_max_mbps = as_number(root.at("c_max_mbps"), "c_max_mbps");
    lb.channel_capacity_cap_bps = *lb.c_max_mbps * 1e6;
  }
  return lb;
}

std::vector<PolygonPrism> buildings_from_json(const json& root) {
  std::vector<PolygonPrism> buildings;
  if (!root.contains("buildings")) return buildings;
  const json& arr = root.at("buildings");
  if (!arr.is_array()) fail_parse("buildings: expected an array");
  buildings.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "buildings[" + std::to_string(i) + "]";
    const json& b = arr[i];
    if (!b.is_object()) fail_parse(at + ": expected an object");

    PolygonPrism prism;
    prism.id = b.contains("id") ? as_int(b.at("id"), at + ".id") : static_cast<int>(i);
    if (!b.contains("bottom_corners")) fail_parse(at + ".bottom_corners: required field");
    const json& corners = b.at("bottom_corners");
    if (!corners.is_array()) fail_parse(at + ".bottom_corners: expected an array");
    prism.bottom_corners.reserve(corners.size());
    for (std::size_t k = 0; k < corners.size(); ++k) {
      const std::string cat = at + ".bottom_corners[" + std::to_string(k) + "]";
      const json& c = corners[k];
      if (!c.is_array() || c.size() != 2) fail_parse(cat + ": expected an [x, y] pair");
      prism.bottom_corners.push_back({as_number(c[0], cat), as_number(c[1], cat)});
    }
    if (!b.contains("height")) fail_parse(at + ".height: required field");
    prism.height = as_number(b.at("height"), at + ".height");
    buildings.push_back(std::move(prism));
  }
  return buildings;
}

std::vector<UserEquipment> users_from_json(const json& root) {
  if (!root.contains("users")) fail_parse("users: required field");
  const json& arr = root.at("users");
  if (!arr.is_array()) fail_parse("users: expected an array");
  std::vector<UserEquipment> users;
  users.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "users[" + std::to_string(i) + "]";
    const json& u = arr[i];
    if (!u.is_object()) fail_parse(at + ": expected an object");
    if (!u.contains("id")) fail_parse(at + ".id: required field");
    if (!u.contains("x") || !u.contains("y")) fail_parse(at + ": requires x and y");
    if (!u.contains("demand_mbps")) fail_parse(at + ".demand_mbps: required field");

    UserEquipment ue;
    ue.id = as_int(u.at("id"), at + ".id");
    ue.position = {as_number(u.at("x"), at + ".x"), as_number(u.at("y"), at + ".y"), 0.0};
    ue.demand_mbps = as_number(u.at("demand_mbps"), at + ".demand_mbps");
    ue.demand_bps = ue.demand_mbps * 1e6;
    users.push_back(ue);
  }
  return users;
}

std::vector<McsEntry> mcs_from_json(const json& root, double bandwidth_hz) {
  if (!root.contains("mcs_table")) return default_mcs_table(bandwidth_hz);
  const json& arr = root.at("mcs_table");
  if (!arr.is_array()) fail_parse("mcs_table: expected an array");
  std::vector<McsEntry> table;
  table.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "mcs_table[" + std::to_string(i) + "]";
    const json& m = arr[i];
    if (!m.is_object()) fail_parse(at + ": expected an object");
    if (!m.contains("rate_mbps")) fail_parse(at + ".rate_mbps: required field");

    McsEntry e;
    e.index = m.contains("index") ? as_int(m.at("index"), at + ".index") : static_cast<int>(i);
    e.rate_mbps = as_number(m.at("rate_mbps"), at + ".rate_mbps");
    e.rate_bps = e.rate_mbps * 1e6;
    if (m.contains("min_snr_db")) {
      e.min_snr_db = as_number(m.at("min_snr_db"), at + ".min_snr_db");
      e.min_snr_linear = db_to_linear(e.min_snr_db);
    } else {
      e.min_snr_linear = std::exp2(e.rate_bps / bandwidth_hz) - 1.0;
      e.min_snr_db = linear_to_db(e.min_snr_linear);
    }
    table.push_back(e);
  }
  return table;
}

VenueBounds venue_from_json(const json& root, const Scenario& partial) {
  double ue_min_x = std::numeric_limits<double>::infinity();
  double ue_max_x = -std::numeric_limits<double>::infinity();
  double ue_min_y = std::numeric_limits<double>::infinity();
  double ue_max_y = -std::numeric_limits<double>::infinity();
  for (const UserEquipment& ue : partial.users) {
    ue_min_x = std::min(ue_min_x, ue.position.x);
    ue_max_x = std::max(ue_max_x, ue.position.x);
    ue_min_y = std::min(ue_min_y, ue.position.y);
    ue_max_y = std::max(ue_max_y, ue.position.y);
  }
  const bool have_users = !partial.users.empty();
  const double dx_min = have_users ? ue_min_x - kUeMarginM : 0.0;
  const double dx_max = have_users ? ue_max_x + kUeMarginM : 0.0;
  const double dy_min = have_users ? ue_min_y - kUeMarginM : 0.0;
  const double dy_max = have_users ? ue_max_y + kUeMarginM : 0.0;

  static const json empty = json::object();
  const json& venue = object_field(root, "venue", empty);
  VenueBounds v;
  v.x_min = number_or(venue, "x_min", dx_min, "venue");
  v.x_max = number_or(venue, "x_max", dx_max, "venue");
  v.y_min = number_or(venue, "y_min", dy_min, "venue");
  v.y_max = number_or(venue, "y_max", dy_max, "venue");
  v.z_min = number_or(venue, "z_min", partial.tallest_building_m(), "venue");
  v.z_max = number_or(venue, "z_max", kAltitudeCeilingM, "venue");
  return v;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) fail_parse("document: expected a JSON object");

  Scenario s;
  s.link_budget = link_budget_from_json(j);
  s.grid_step_m = number_or(j, "grid_step_m", kDefaultGridStepM, "document");
  s.slot = j.contains("slot") ? as_int(j.at("slot"), "slot") : 0;
  s.buildings = buildings_from_json(j);
  s.users = users_from_json(j);
  s.mcs_table = mcs_from_json(j, s.link_budget.bandwidth_hz);
  s.venue = venue_from_json(j, s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  Scenario s = scenario_from_json(j);
  validate_scenario(s);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["venue"] = {{"x_min", s.venue.x_min}, {"x_max", s.venue.x_max}, {"y_min", s.venue.y_min},
                {"y_max", s.venue.y_max}, {"z_min", s.venue.z_min}, {"z_max", s.venue.z_max}};

  json buildings = json::array();
  for (const PolygonPrism& b : s.buildings) {
    json corners = json::array();
    for (const Point2& c : b.bottom_corners) corners.push_back({c.x, c.y});
    buildings.push_back({{"id", b.id}, {"bottom_corners", corners}, {"height", b.height}});
  }
  j["buildings"] = buildings;

  json users = json::array();
  for (const UserEquipment& ue : s.users) {
    users.push_back({{"id", ue.id},
                     {"x", ue.position.x},
                     {"y", ue.position.y},
                     {"demand_mbps", ue.demand_mbps}});
  }
  j["users"] = users;

  const LinkBudget& lb = s.link_budget;
  j["radio"] = {{"frequency_mhz", lb.frequency_mhz},   {"bandwidth_mhz", lb.bandwidth_mhz},
                {"tx_power_dbm", lb.tx_power_dbm},     {"tx_gain_dbi", lb.tx_gain_dbi},
                {"rx_gain_dbi", lb.rx_gain_dbi},       {"noise_floor_dbm", lb.noise_floor_dbm},
                {"nlos_loss_db", lb.nlos_extra_loss_db}};

  json mcs = json::array();
  for (const McsEntry& e : s.mcs_table) {
    mcs.push_back(
        {{"index", e.index}, {"rate_mbps", e.rate_mbps}, {"min_snr_db", e.min_snr_db}});
  }
  j["mcs_table"] = mcs;

  j["grid_step_m"] = s.grid_step_m;
  j["slot"] = s.slot;
  if (lb.c_max_mbps) j["c_max_mbps"] = *lb.c_max_mbps;
  return j;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  write_text_file(path, scenario_to_json(s).dump(2) + "\n");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory: " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace uavp
