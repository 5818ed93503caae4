/* Apache License, Version 2.0 */
#include "rtopo.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rtopo/document.hpp"
#include "rtopo/generalize.hpp"
#include "rtopo/relate.hpp"

using nlohmann::ordered_json;

struct rtopo_region {
  rtopo::RegionDocument doc;
  rtopo::Region region;
};

namespace {

thread_local std::string g_error_name = "None";
thread_local std::string g_error_message;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
rtopo_status guarded(F&& body) {
  try {
    body();
    return RTOPO_OK;
  } catch (const rtopo::Error& e) {
    g_error_name = e.name();
    g_error_message = e.what();
    return RTOPO_ERROR;
  } catch (const std::invalid_argument& e) {
    g_error_name = "BadArgument";
    g_error_message = e.what();
    return RTOPO_BAD_ARGUMENT;
  } catch (const std::exception& e) {
    g_error_name = "Internal";
    g_error_message = e.what();
    return RTOPO_ERROR;
  }
}

ordered_json point_json(const rtopo::Point& p) {
  auto coord = [](const rtopo::Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
      return ordered_json(q.get_num().get_si());
    return ordered_json(rtopo::rational_str(q));
  };
  return ordered_json::array({coord(p.x), coord(p.y)});
}

ordered_json matrix_json(const rtopo::NineIntersection& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m.m[i][j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json method_result(const rtopo::NineIntersection& m) {
  ordered_json out;
  out["matrix"] = m.str();
  out["matrix_json"] = matrix_json(m);
  auto name = rtopo::rcc8_name(m);
  out["rcc8"] = name ? ordered_json(rtopo::rcc8_str(*name)) : ordered_json(nullptr);
  return out;
}

}  // namespace

extern "C" {

const char* rtopo_last_error_name(void) { return g_error_name.c_str(); }
const char* rtopo_last_error_message(void) { return g_error_message.c_str(); }

rtopo_status rtopo_region_parse(const char* json_text, rtopo_region** out) {
  if (!json_text || !out) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    rtopo::RegionDocument doc = rtopo::parse_region_document(json_text);
    rtopo::Region region = rtopo::region_from_document(doc);
    *out = new rtopo_region{std::move(doc), std::move(region)};
  });
}

void rtopo_region_free(rtopo_region* region) { delete region; }

void rtopo_string_free(char* text) { std::free(text); }

rtopo_status rtopo_region_document(const rtopo_region* region, char** out_json) {
  if (!region || !out_json) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    *out_json = dup_string(rtopo::serialize_region_document(region->doc));
  });
}

rtopo_status rtopo_region_components(const rtopo_region* region, char** out_json) {
  if (!region || !out_json) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    ordered_json arr = ordered_json::array();
    for (const rtopo::Component& c : region->region.components()) {
      ordered_json jc;
      jc["id"] = c.id;
      jc["kind"] = rtopo::component_kind_str(c.kind);
      jc["level"] = c.level;
      jc["area"] = c.kind == rtopo::ComponentKind::Unbounded
                       ? ordered_json(nullptr)
                       : ordered_json(rtopo::rational_str(c.area));
      arr.push_back(std::move(jc));
    }
    *out_json = dup_string(arr.dump());
  });
}

rtopo_status rtopo_region_classify(const rtopo_region* region, char** out_text) {
  if (!region || !out_text) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(rtopo::shape_class_str(region->region.classify()));
  });
}

rtopo_status rtopo_region_atoms(const rtopo_region* region, char** out_json) {
  if (!region || !out_json) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    ordered_json arr = ordered_json::array();
    for (const rtopo::Atom& a : region->region.atoms()) {
      ordered_json ja;
      ordered_json ring = ordered_json::array();
      for (const rtopo::Point& p : a.ring.vertices()) ring.push_back(point_json(p));
      ja["ring"] = std::move(ring);
      ja["area"] = rtopo::rational_str(a.ring.area());
      ordered_json roles = ordered_json::array();
      for (const rtopo::AtomRoleEntry& r : a.roles) {
        ordered_json jr;
        switch (r.role) {
          case rtopo::AtomRole::GeneralizedOf:
            jr["role"] = "generalized_of";
            jr["component"] = r.component;
            break;
          case rtopo::AtomRole::HoleOf:
            jr["role"] = "hole_of";
            jr["component"] = r.component;
            break;
          case rtopo::AtomRole::ComponentOfGeneralizedRegion:
            jr["role"] = "component_of_generalized_region";
            break;
        }
        roles.push_back(std::move(jr));
      }
      ja["roles"] = std::move(roles);
      arr.push_back(std::move(ja));
    }
    *out_json = dup_string(arr.dump());
  });
}

rtopo_status rtopo_region_graph_dot(const rtopo_region* region, char** out_text) {
  if (!region || !out_text) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(region->region.link_graph().to_dot());
  });
}

rtopo_status rtopo_region_graph_json(const rtopo_region* region, char** out_json) {
  if (!region || !out_json) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    *out_json = dup_string(region->region.link_graph().to_json());
  });
}

rtopo_status rtopo_relate(const rtopo_region* a, const rtopo_region* b,
                          const char* method, char** out_json) {
  if (!a || !b || !method || !out_json) return RTOPO_BAD_ARGUMENT;
  std::string m(method);
  if (m != "global" && m != "local" && m != "both") return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    ordered_json out;
    out["method"] = m;
    if (m == "global") {
      out["global"] = method_result(rtopo::nine_intersection_global(a->region, b->region));
    } else if (m == "local") {
      out["local"] = method_result(rtopo::nine_intersection_local(a->region, b->region));
    } else {
      rtopo::LocalGlobalCheck chk =
          rtopo::verify_local_equals_global(a->region, b->region);
      out["global"] = method_result(chk.global);
      out["local"] = method_result(chk.local);
      out["verdict"] = chk.agree ? "AGREE" : "DISAGREE";
    }
    *out_json = dup_string(out.dump());
  });
}

rtopo_status rtopo_isomorphic(const rtopo_region* a, const rtopo_region* b,
                              int* out) {
  if (!a || !b || !out) return RTOPO_BAD_ARGUMENT;
  return guarded([&] {
    *out = rtopo::link_graph_isomorphic(a->region.link_graph(),
                                        b->region.link_graph())
               ? 1
               : 0;
  });
}

rtopo_status rtopo_generalize(const rtopo_region* region, const char* min_area,
                              long steps, char** out_doc_json) {
  if (!region || !out_doc_json) return RTOPO_BAD_ARGUMENT;
  std::optional<rtopo::Rational> threshold;
  if (min_area) {
    threshold = rtopo::parse_rational(min_area);
    if (!threshold || sgn(*threshold) <= 0) {
      g_error_name = "BadRational";
      g_error_message = "min_area must be a positive rational";
      return RTOPO_ERROR;
    }
  }
  return guarded([&] {
    rtopo::Region cur = region->region;
    if (threshold) cur = rtopo::drop_small(cur, *threshold);
    cur = rtopo::generalize_steps(cur, steps);
    *out_doc_json =
        dup_string(rtopo::serialize_region_document(rtopo::document_for_region(cur)));
  });
}

}  // extern "C"
