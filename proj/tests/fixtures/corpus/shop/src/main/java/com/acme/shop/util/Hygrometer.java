package com.acme.shop.util;

public class Hygrometer {
    private int humidity;
    private final int humidityLimit = 95;

    public void addHumidity(int amount) {
        humidity = Math.min(humidity + amount, humidityLimit);
    }

    public int humidityValue() {
        return humidity;
    }

    public boolean isHumidityFull() {
        return humidity >= humidityLimit;
    }

    public void clearHumidity() {
        // back to the initial state
        humidity = 0;
    }
}
