package conf;

public class Config {
    private int port;

    private String host = "a";

    public void touch() {
    }
}
