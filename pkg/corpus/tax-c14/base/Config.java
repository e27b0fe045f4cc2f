package conf;

public class Config {
    private int port;

    public void touch() {
    }
}
