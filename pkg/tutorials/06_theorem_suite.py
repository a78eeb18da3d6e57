"""Running the theorem checks from Python and reading the report."""

from coronalab.harness import CHECKS, SuiteConfig, check_instance, parse_family, report_json, run_suite

for c in CHECKS[:3]:
    print(c.id, c.kind, "-", c.title)

# A single check on a single instance.
out = check_instance("T12", parse_family("P4", 7)[1], parse_family("K1", 7)[1], g_name="P4", h_name="K1")
print("T12 on P4 ⊙ K1:", out.status)
for a in out.assertions:
    print("   ", a["kind"], a["name"], "->", a["ok"])

# A reduced suite: two checks on a handful of families.
config = SuiteConfig(g_families=("P3", "C4", "K3"), h_families=("K1", "K2"), ks=(2,), checks=("T9", "T19"))
report = run_suite(config)
for entry in report["checks"]:
    print(f"{entry['id']}: {entry['pass']} pass, {entry['fail']} fail, {entry['skip']} skip, "
          f"{entry['annotations']} annotations")
print("clean:", report["summary"]["clean"], f"({len(report_json(report))} bytes of JSON)")
