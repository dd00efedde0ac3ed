// Copyright 2026 The semdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semdd/service/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "semdd/rdf/term.hpp"

namespace semdd::service {

using nlohmann::json;

void TermRegistry::add(TermDefinition def, const rdf::PrefixMap& prefixes) {
  auto colon = def.qname.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("not a qualified name: " + def.qname);
  if (!prefixes.contains(std::string_view(def.qname).substr(0, colon))) {
    throw std::invalid_argument("unresolvable qualified name: " + def.qname);
  }
  std::string key = def.qname;
  terms_.insert_or_assign(std::move(key), std::move(def));
}

const TermDefinition* TermRegistry::find(std::string_view qname) const {
  auto it = terms_.find(qname);
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<TermDefinition> TermRegistry::list() const {
  std::vector<TermDefinition> out;
  for (const auto& [k, v] : terms_) out.push_back(v);
  return out;
}

TermRegistry default_terms(const rdf::PrefixMap& prefixes) {
  const std::string ncit(kSourceNcit), local(kSourceProject), prov(kSourceProv);
  const std::vector<TermDefinition> defs = {
      {"ncit:age", "Age", "How long a subject has lived, measured from birth.", ncit},
      {"ncit:species", "Species", "The taxonomic species an organism belongs to.", ncit},
      {"ncit:subjectID", "Subject Identifier", "Identifier assigned to a study participant.", ncit},
      {"cuci:animalNumber", "Animal Number", "Identifier of a laboratory animal within the project.", local},
      {"cuci:condition", "Rearing Condition", "Early-life rearing condition the animal was exposed to.", local},
      {"cuci:EarlyLifeStressor", "Early-Life Stressor", "Record of the early-life stress paradigm applied to an animal.",
       local},
      {"cuci:region", "Region of Interest", "Anatomical region traced on an image.", local},
      {"cuci:slice", "Slice", "Index of the image slice a tracing was drawn on.", local},
      {"cuci:hemisphere", "Hemisphere", "Brain hemisphere of a tracing, left or right.", local},
      {"cuci:area", "Traced Area", "Area of the traced region in square millimetres.", local},
      {"cuci:faMean", "Mean FA", "Mean fractional anisotropy inside the traced region.", local},
      {"cuci:RoiSliceStatistics", "ROI Slice Statistics", "Statistics of one region on one slice.", local},
      {"cuci:RoiSliceHemisphereStatistics", "ROI Slice Hemisphere Statistics",
       "Statistics of one region on one slice and hemisphere.", local},
      {"cuci:timePoint", "Time Point", "Ordinal of a repeated measurement within a recording.", local},
      {"cuci:heartRate", "Heart Rate", "Heart beats per minute at one time point.", local},
      {"cuci:HeartRateRecording", "Heart Rate Recording", "Session in which heart rate was recorded.", local},
      {"cuci:HeartRateMeasurement", "Heart Rate Measurement", "Heart rate at one time point of a recording.",
       local},
      {"prov:Agent", "Agent", "Something that bears responsibility for an activity or entity.", prov},
      {"prov:Activity", "Activity", "Something that occurs over a period of time and acts upon entities.", prov},
      {"prov:Entity", "Entity", "A physical, digital or conceptual thing with some fixed aspects.", prov},
      {"prov:wasGeneratedBy", "was generated by", "Links an entity to the activity that produced it.", prov},
      {"prov:wasAssociatedWith", "was associated with", "Links an activity to an agent responsible for it.", prov},
      {"prov:used", "used", "Links an activity to an entity it consumed.", prov},
      {"prov:wasDerivedFrom", "was derived from", "Links an entity to an entity it was built from.", prov},
      {"prov:wasAttributedTo", "was attributed to", "Links an entity to a responsible agent.", prov},
  };
  TermRegistry reg;
  for (const auto& d : defs) reg.add(d, prefixes);
  return reg;
}

// ---------------------------------------------------------------------------

std::string slot_type_name(SlotType t) {
  switch (t) {
    case SlotType::Iri: return "iri";
    case SlotType::String: return "string";
    case SlotType::Integer: return "integer";
    case SlotType::Decimal: return "decimal";
  }
  return "string";
}

namespace {

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string scalar_text(const TemplateSlot& slot, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw TemplateError("parameter " + slot.name + " must be a string or number");
}

}  // namespace

std::string render_slot(const TemplateSlot& slot, const json& value) {
  std::string text = scalar_text(slot, value);
  switch (slot.type) {
    case SlotType::String:
      return quote_string(text);
    case SlotType::Integer:
      if (!rdf::is_integer_lexical(text)) throw TemplateError("parameter " + slot.name + " is not an integer: " + text);
      return text;
    case SlotType::Decimal:
      if (rdf::is_integer_lexical(text) || rdf::is_decimal_lexical(text)) return text;
      if (rdf::is_double_lexical(text)) return text;
      throw TemplateError("parameter " + slot.name + " is not a number: " + text);
    case SlotType::Iri:
      if (text.empty() || text.find_first_of("<>\"{}|^`\\ \t\r\n") != std::string::npos) {
        throw TemplateError("parameter " + slot.name + " is not a valid IRI: " + text);
      }
      return "<" + text + ">";
  }
  return text;
}

std::vector<std::string> placeholders_in(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = text.find("{{", pos)) != std::string_view::npos) {
    auto end = text.find("}}", pos + 2);
    if (end == std::string_view::npos) break;
    out.emplace_back(text.substr(pos + 2, end - pos - 2));
    pos = end + 2;
  }
  return out;
}

std::string instantiate(const QueryTemplate& tmpl, const json& params) {
  if (!params.is_null() && !params.is_object()) throw TemplateError("params must be a JSON object");
  std::map<std::string, std::string> rendered;
  if (params.is_object()) {
    for (const auto& [key, value] : params.items()) {
      auto it = std::find_if(tmpl.slots.begin(), tmpl.slots.end(), [&](const TemplateSlot& s) { return s.name == key; });
      if (it == tmpl.slots.end()) throw TemplateError("template " + tmpl.id + " has no parameter " + key);
      if (value.is_null()) continue;
      rendered[key] = render_slot(*it, value);
    }
  }
  for (const auto& s : tmpl.slots) {
    if (!s.optional && !rendered.count(s.name)) throw TemplateError("missing required parameter " + s.name);
  }

  std::string out;
  std::istringstream in(tmpl.text);
  std::string line;
  while (std::getline(in, line)) {
    bool drop = false;
    std::string result;
    std::size_t pos = 0;
    while (true) {
      auto open = line.find("{{", pos);
      if (open == std::string::npos) {
        result.append(line, pos);
        break;
      }
      auto close = line.find("}}", open + 2);
      if (close == std::string::npos) {
        result.append(line, pos);
        break;
      }
      result.append(line, pos, open - pos);
      std::string name = line.substr(open + 2, close - open - 2);
      auto it = rendered.find(name);
      if (it == rendered.end()) {
        drop = true;
        break;
      }
      result += it->second;
      pos = close + 2;
    }
    if (!drop) out += result + "\n";
  }
  return out;
}

namespace {

std::vector<QueryTemplate> build_templates() {
  const TemplateSlot subject{"subject_id", SlotType::String, true, "Only this subject"};
  const TemplateSlot min_age{"min_age", SlotType::Decimal, true, "Lower age bound, inclusive"};
  const TemplateSlot max_age{"max_age", SlotType::Decimal, true, "Upper age bound, inclusive"};

  std::vector<QueryTemplate> t;
  t.push_back({"rodent-demographics", "rodent-imaging", "Rodent demographics",
               {subject, min_age, max_age},
               "SELECT ?subject_id ?species ?age WHERE {\n"
               "  ?assessment prov:wasAssociatedWith ?animal .\n"
               "  ?animal cuci:animalNumber ?subject_id ;\n"
               "    ncit:species ?species .\n"
               "  ?demographics prov:wasGeneratedBy ?assessment ;\n"
               "    ncit:age ?age .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "  FILTER(?age >= {{min_age}})\n"
               "  FILTER(?age <= {{max_age}})\n"
               "}\n"
               "ORDER BY ?subject_id\n",
               {{"subject_id", "cuci:animalNumber"}, {"species", "ncit:species"}, {"age", "ncit:age"}}});
  t.push_back({"rodent-stressor", "rodent-imaging", "Rodent early-life stressor",
               {subject, {"condition", SlotType::String, true, "Only this rearing condition"}},
               "SELECT ?subject_id ?condition WHERE {\n"
               "  ?assessment prov:wasAssociatedWith ?animal .\n"
               "  ?animal cuci:animalNumber ?subject_id .\n"
               "  ?stressor prov:wasGeneratedBy ?assessment ;\n"
               "    rdf:type cuci:EarlyLifeStressor ;\n"
               "    cuci:condition ?condition .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "  FILTER(?condition = {{condition}})\n"
               "}\n"
               "ORDER BY ?subject_id\n",
               {{"subject_id", "cuci:animalNumber"}, {"condition", "cuci:condition"}}});
  t.push_back({"rodent-roi-statistics", "rodent-imaging", "Rodent ROI statistics per slice and hemisphere",
               {subject, {"region", SlotType::String, true, "Only this region"}},
               "SELECT ?subject_id ?region ?slice ?hemisphere ?area ?fa_mean WHERE {\n"
               "  ?tracing prov:wasAssociatedWith ?animal .\n"
               "  ?animal cuci:animalNumber ?subject_id .\n"
               "  ?stats prov:wasGeneratedBy ?tracing ;\n"
               "    rdf:type cuci:RoiSliceHemisphereStatistics ;\n"
               "    cuci:region ?region ;\n"
               "    cuci:slice ?slice ;\n"
               "    cuci:hemisphere ?hemisphere ;\n"
               "    cuci:area ?area ;\n"
               "    cuci:faMean ?fa_mean .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "  FILTER(?region = {{region}})\n"
               "}\n"
               "ORDER BY ?subject_id ?region ?slice ?hemisphere\n",
               {{"subject_id", "cuci:animalNumber"},
                {"region", "cuci:region"},
                {"slice", "cuci:slice"},
                {"hemisphere", "cuci:hemisphere"},
                {"area", "cuci:area"},
                {"fa_mean", "cuci:faMean"}}});
  t.push_back({"human-demographics", "human-assessment", "Human demographics",
               {subject, min_age, max_age},
               "SELECT ?subject_id ?species ?age WHERE {\n"
               "  ?assessment prov:wasAssociatedWith ?subject .\n"
               "  ?subject ncit:subjectID ?subject_id ;\n"
               "    ncit:species ?species .\n"
               "  ?demographics prov:wasGeneratedBy ?assessment ;\n"
               "    ncit:age ?age .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "  FILTER(?age >= {{min_age}})\n"
               "  FILTER(?age <= {{max_age}})\n"
               "}\n"
               "ORDER BY ?subject_id\n",
               {{"subject_id", "ncit:subjectID"}, {"species", "ncit:species"}, {"age", "ncit:age"}}});
  t.push_back({"heart-rate", "heart-rate", "Human heart rate per time point",
               {subject, {"time_point", SlotType::Integer, true, "Only this time point"}},
               "SELECT ?subject_id ?time_point ?heart_rate WHERE {\n"
               "  ?recording prov:wasAssociatedWith ?subject .\n"
               "  ?subject ncit:subjectID ?subject_id .\n"
               "  ?measurement prov:wasGeneratedBy ?recording ;\n"
               "    rdf:type cuci:HeartRateMeasurement ;\n"
               "    cuci:timePoint ?time_point ;\n"
               "    cuci:heartRate ?heart_rate .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "  FILTER(?time_point = {{time_point}})\n"
               "}\n"
               "ORDER BY ?subject_id ?time_point\n",
               {{"subject_id", "ncit:subjectID"}, {"time_point", "cuci:timePoint"}, {"heart_rate", "cuci:heartRate"}}});
  t.push_back({"heart-rate-mean", "heart-rate", "Mean human heart rate across time points",
               {subject},
               "SELECT ?subject_id (AVG(?heart_rate) AS ?mean_heart_rate) (COUNT(?measurement) AS ?time_points)\n"
               "WHERE {\n"
               "  ?recording prov:wasAssociatedWith ?subject .\n"
               "  ?subject ncit:subjectID ?subject_id .\n"
               "  ?measurement prov:wasGeneratedBy ?recording ;\n"
               "    cuci:heartRate ?heart_rate .\n"
               "  FILTER(?subject_id = {{subject_id}})\n"
               "}\n"
               "GROUP BY ?subject_id\n"
               "ORDER BY ?subject_id\n",
               {{"subject_id", "ncit:subjectID"}, {"mean_heart_rate", "cuci:heartRate"}}});
  return t;
}

}  // namespace

const std::vector<QueryTemplate>& default_templates() {
  static const std::vector<QueryTemplate> templates = build_templates();
  return templates;
}

const QueryTemplate* find_template(std::string_view id) {
  for (const auto& t : default_templates()) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const std::vector<DataType>& default_data_types() {
  static const std::vector<DataType> types = {
      {"demographics", "Age from a demographics assessment", "ncit:age", "",
       {"rodent-demographics", "human-demographics"}},
      {"early-life-stressor", "Early-life rearing condition", "rdf:type", "cuci:EarlyLifeStressor",
       {"rodent-stressor"}},
      {"roi-statistics", "DTI region-of-interest statistics", "rdf:type", "cuci:RoiSliceHemisphereStatistics",
       {"rodent-roi-statistics"}},
      {"heart-rate", "Heart-rate recordings", "rdf:type", "cuci:HeartRateMeasurement", {"heart-rate"}},
  };
  return types;
}

const DataType* find_data_type(std::string_view name) {
  for (const auto& d : default_data_types()) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

json to_json(const TermDefinition& def) {
  return {{"qname", def.qname}, {"label", def.label}, {"definition", def.definition}, {"source", def.source}};
}

json to_json(const QueryTemplate& tmpl) {
  json slots = json::array();
  for (const auto& s : tmpl.slots) {
    slots.push_back({{"name", s.name},
                     {"type", slot_type_name(s.type)},
                     {"optional", s.optional},
                     {"description", s.description}});
  }
  return {{"id", tmpl.id},
          {"model", tmpl.model},
          {"title", tmpl.title},
          {"slots", slots},
          {"text", tmpl.text},
          {"annotations", tmpl.annotations}};
}

json to_json(const DataType& dt) {
  return {{"name", dt.name}, {"description", dt.description}, {"templates", dt.templates}};
}

}  // namespace semdd::service
