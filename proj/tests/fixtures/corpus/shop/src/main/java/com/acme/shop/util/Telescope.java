package com.acme.shop.util;

/** Tracks zoom up to a fixed limit. */
public class Telescope {
    private int zoom;
    private final int zoomLimit = 160;

    public void addZoom(int amount) {
        zoom = Math.min(zoom + amount, zoomLimit);
    }

    public int zoomValue() {
        return zoom;
    }

    public boolean isZoomFull() {
        return zoom >= zoomLimit;
    }

    public void clearZoom() {
        // back to the initial state
        zoom = 0;
    }

    public int zoomHeadroom() {
        return zoomLimit - zoom;
    }
}
