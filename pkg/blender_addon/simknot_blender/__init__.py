"""Blender companion add-on: draw one quarter of a doubly symmetric knot,
mirror it into the full closed curve, and watch live crossing counts.

Counting is never reimplemented here: the add-on exports the snapped
quarter to the interchange format and shells out to the core ``simknot``
CLI; failures are shown verbatim in the side panel.  All real logic lives
in :mod:`.core`, which is importable (and tested) without Blender.

Install: zip the ``simknot_blender`` directory and add it through
Edit > Preferences > Add-ons; set the CLI path in the add-on preferences
if ``simknot`` is not on PATH.
"""

from __future__ import annotations

import shlex

from . import core

try:
    import bpy
except ImportError:  # headless use and tests
    bpy = None

bl_info = {
    "name": "Symmetric Knot Quarters",
    "author": "simknot",
    "version": (0, 1, 0),
    "blender": (3, 0, 0),
    "location": "View3D > Sidebar > Knot",
    "description": "Mirror a quarter polyline into a doubly symmetric knot and show its three projection crossing counts",
    "category": "Add Curve",
}

SESSION = core.AddonSession()
STRINGS_PROP = "simknot_vertex_strings"
NAME_PROP = "simknot_name"
DELTA_PROP = "simknot_delta"
DEBOUNCE_SECONDS = 0.4


def _cli_command(context) -> list[str]:
    prefs = context.preferences.addons[__name__].preferences
    return shlex.split(prefs.cli_path) or ["simknot"]


def _polyline_coords(obj) -> list[tuple[float, float, float]]:
    if obj is None or obj.type != "CURVE" or not obj.data.splines:
        raise core.QuarterShapeError("select an open poly curve first")
    spline = obj.data.splines[0]
    if spline.type != "POLY":
        raise core.QuarterShapeError("set the spline type to Poly first")
    if spline.use_cyclic_u:
        raise core.QuarterShapeError("the quarter must be an open curve")
    return [tuple(p.co[:3]) for p in spline.points]


def _stored_strings(obj) -> dict[int, tuple[str, str, str]]:
    import json

    raw = obj.get(STRINGS_PROP)
    if not raw:
        return {}
    return {int(k): tuple(v) for k, v in json.loads(raw).items()}


def _remember_strings(obj, strings) -> None:
    import json

    obj[STRINGS_PROP] = json.dumps({str(i): list(s) for i, s in enumerate(strings)})


def _export_text(obj, lattice_snap: bool) -> str:
    coords = _polyline_coords(obj)
    strings = core.vertex_strings(coords, _stored_strings(obj), lattice_snap)
    strings = core.snap_endpoints_onto_axes(strings)
    name = obj.get(NAME_PROP, obj.name)
    delta = obj.get(DELTA_PROP, core.DEFAULT_DELTA_TEXT)
    return core.quarter_file_text(name, delta, strings)


if bpy is not None:

    class SimknotPreferences(bpy.types.AddonPreferences):
        bl_idname = __name__

        cli_path: bpy.props.StringProperty(
            name="Core CLI",
            description="Command used to run the simknot CLI",
            default="simknot",
        )
        lattice_snap: bpy.props.BoolProperty(
            name="Snap edits to the 1/5 lattice",
            default=True,
        )

        def draw(self, context):
            self.layout.prop(self, "cli_path")
            self.layout.prop(self, "lattice_snap")

    class SIMKNOT_OT_symmetrize(bpy.types.Operator):
        """Build the closed symmetric curve from the selected quarter"""

        bl_idname = "simknot.symmetrize"
        bl_label = "Symmetrize Quarter"
        bl_options = {"REGISTER", "UNDO"}

        def execute(self, context):
            prefs = context.preferences.addons[__name__].preferences
            obj = context.active_object
            try:
                coords = _polyline_coords(obj)
                strings = core.vertex_strings(coords, _stored_strings(obj), prefs.lattice_snap)
                strings = core.snap_endpoints_onto_axes(strings)
                closed = core.full_polygon(strings)
            except core.QuarterShapeError as exc:
                self.report({"ERROR"}, str(exc))
                return {"CANCELLED"}
            name = f"{obj.name}_full"
            existing = bpy.data.objects.get(name)
            if existing is not None:
                bpy.data.objects.remove(existing, do_unlink=True)
            curve = bpy.data.curves.new(name, type="CURVE")
            curve.dimensions = "3D"
            spline = curve.splines.new("POLY")
            spline.points.add(len(closed) - 1)
            for point, triple in zip(spline.points, closed):
                point.co = (float(triple[0]), float(triple[1]), float(triple[2]), 1.0)
            spline.use_cyclic_u = True
            full = bpy.data.objects.new(name, curve)
            context.collection.objects.link(full)
            self.report({"INFO"}, f"closed curve with {len(closed)} vertices")
            return {"FINISHED"}

    class SIMKNOT_OT_refresh_counts(bpy.types.Operator):
        """Export the quarter and fetch crossing counts from the core CLI"""

        bl_idname = "simknot.refresh_counts"
        bl_label = "Refresh Counts"

        def execute(self, context):
            prefs = context.preferences.addons[__name__].preferences
            obj = context.active_object
            try:
                text = _export_text(obj, prefs.lattice_snap)
            except core.QuarterShapeError as exc:
                SESSION.stale = True
                SESSION.message = str(exc)
                return {"CANCELLED"}
            token = SESSION.scheduler.begin()

            def worker():
                result = core.run_count(_cli_command(context), text)
                SESSION.publish(token, result)
                return None  # one-shot timer

            bpy.app.timers.register(worker, first_interval=DEBOUNCE_SECONDS)
            return {"FINISHED"}

    class SIMKNOT_OT_import_quarter(bpy.types.Operator):
        """Load a quarter-arc interchange file as a poly curve"""

        bl_idname = "simknot.import_quarter"
        bl_label = "Import Quarter"

        filepath: bpy.props.StringProperty(subtype="FILE_PATH")

        def invoke(self, context, event):
            context.window_manager.fileselect_add(self)
            return {"RUNNING_MODAL"}

        def execute(self, context):
            try:
                with open(self.filepath, encoding="utf-8") as fh:
                    name, delta, strings = core.parse_quarter_text(fh.read())
            except (OSError, ValueError) as exc:
                self.report({"ERROR"}, f"cannot import: {exc}")
                return {"CANCELLED"}
            curve = bpy.data.curves.new(name, type="CURVE")
            curve.dimensions = "3D"
            spline = curve.splines.new("POLY")
            spline.points.add(len(strings) - 1)
            from fractions import Fraction

            for point, triple in zip(spline.points, strings):
                point.co = (*(float(Fraction(c)) for c in triple), 1.0)
            obj = bpy.data.objects.new(name, curve)
            obj[NAME_PROP] = name
            obj[DELTA_PROP] = delta
            _remember_strings(obj, strings)
            context.collection.objects.link(obj)
            context.view_layer.objects.active = obj
            return {"FINISHED"}

    class SIMKNOT_OT_export_quarter(bpy.types.Operator):
        """Write the selected quarter back to the interchange format"""

        bl_idname = "simknot.export_quarter"
        bl_label = "Export Quarter"

        filepath: bpy.props.StringProperty(subtype="FILE_PATH")

        def invoke(self, context, event):
            context.window_manager.fileselect_add(self)
            return {"RUNNING_MODAL"}

        def execute(self, context):
            prefs = context.preferences.addons[__name__].preferences
            try:
                text = _export_text(context.active_object, prefs.lattice_snap)
            except core.QuarterShapeError as exc:
                self.report({"ERROR"}, str(exc))
                return {"CANCELLED"}
            with open(self.filepath, "w", encoding="utf-8") as fh:
                fh.write(text)
            return {"FINISHED"}

    class SIMKNOT_PT_panel(bpy.types.Panel):
        bl_label = "Symmetric Knot"
        bl_space_type = "VIEW_3D"
        bl_region_type = "UI"
        bl_category = "Knot"

        def draw(self, context):
            layout = self.layout
            layout.operator("simknot.import_quarter")
            layout.operator("simknot.export_quarter")
            layout.operator("simknot.symmetrize")
            layout.operator("simknot.refresh_counts")
            layout.label(text=SESSION.panel_text())

    _CLASSES = (
        SimknotPreferences,
        SIMKNOT_OT_symmetrize,
        SIMKNOT_OT_refresh_counts,
        SIMKNOT_OT_import_quarter,
        SIMKNOT_OT_export_quarter,
        SIMKNOT_PT_panel,
    )

    def register():
        for cls in _CLASSES:
            bpy.utils.register_class(cls)

    def unregister():
        for cls in reversed(_CLASSES):
            bpy.utils.unregister_class(cls)
