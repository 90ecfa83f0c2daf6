package com.acme.shop.util;

public class RainGauge {
    private int rainfall;
    private final int rainfallLimit = 45;

    public void addRainfall(int amount) {
        rainfall = Math.min(rainfall + amount, rainfallLimit);
    }

    public int rainfallValue() {
        return rainfall;
    }

    public boolean isRainfallFull() {
        return rainfall >= rainfallLimit;
    }

    public void clearRainfall() {
        // back to the initial state
        rainfall = 0;
    }
}
